#include "semhuff/codebook_io.hpp"

#include <cstring>

#include "semhuff/bitio.hpp"

namespace semhuff {

namespace {

constexpr char kMagic[4] = {'S', 'C', 'B', 'K'};
constexpr std::uint8_t kVersion = 1;
constexpr std::uint8_t kFlagSemantic = 0x01;

struct Cursor {
  std::span<const std::uint8_t> bytes;
  std::size_t at = 0;

  const std::uint8_t* take(std::size_t n) {
    if (bytes.size() - at < n) fail(ErrorKind::FormatError, "codebook file truncated");
    const std::uint8_t* p = bytes.data() + at;
    at += n;
    return p;
  }
  template <typename T>
  T scalar() {
    return get_le<T>(take(sizeof(T)));
  }
};

}  // namespace

SetDistribution CodebookBundle::distribution() const {
  return aggregate_probabilities(model, partition);
}

std::vector<std::uint8_t> write_codebook(const CodebookBundle& bundle) {
  const std::uint32_t n_symbols = bundle.table.size();
  const std::uint32_t n_sets = bundle.partition.set_count();
  if (n_symbols == 0 || n_sets == 0) {
    fail(ErrorKind::InvalidInput, "cannot serialize an empty codebook");
  }
  if (!bundle.partition.well_formed() || bundle.partition.symbol_count() != n_symbols) {
    fail(ErrorKind::InvalidInput, "partition does not match the symbol table");
  }
  if (bundle.model.counts.size() != n_symbols) {
    fail(ErrorKind::InvalidInput, "model does not match the symbol table");
  }
  if (bundle.codebook.unit_count() != n_sets) {
    fail(ErrorKind::InvalidInput, "codebook units do not match the partition sets");
  }
  if (!bundle.semantic) {
    for (std::uint32_t id = 0; id < n_symbols; ++id) {
      if (bundle.partition.set_of(id) != id) {
        fail(ErrorKind::InvalidInput, "classical codebook requires the identity partition");
      }
    }
  }

  std::vector<std::uint8_t> out;
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(kVersion);
  out.push_back(bundle.semantic ? kFlagSemantic : 0);
  put_le<std::uint32_t>(out, n_sets);
  put_le<std::uint32_t>(out, n_symbols);
  put_le<std::uint64_t>(out, bundle.model.total);

  for (std::uint32_t id = 0; id < n_symbols; ++id) {
    const std::string_view token = bundle.table.token(id);
    if (token.size() > UINT16_MAX) {
      fail(ErrorKind::InvalidInput, "token longer than 65535 bytes");
    }
    put_le<std::uint16_t>(out, static_cast<std::uint16_t>(token.size()));
    out.insert(out.end(), token.begin(), token.end());
    put_le<std::uint64_t>(out, bundle.model.counts[id]);
    put_le<std::uint32_t>(out, bundle.partition.set_of(id));
  }

  for (std::uint32_t k = 0; k < n_sets; ++k) {
    const std::uint32_t len = bundle.codebook.entries[k].length;
    if (len < 1 || len > 64) {
      fail(ErrorKind::InvalidInput, "code length " + std::to_string(len) + " outside 1..64");
    }
    out.push_back(static_cast<std::uint8_t>(len));
  }
  return out;
}

CodebookBundle read_codebook(std::span<const std::uint8_t> bytes) {
  Cursor cur{bytes};
  if (std::memcmp(cur.take(4), kMagic, 4) != 0) {
    fail(ErrorKind::FormatError, "bad codebook magic");
  }
  const std::uint8_t version = *cur.take(1);
  if (version != kVersion) {
    fail(ErrorKind::FormatError, "unsupported codebook version " + std::to_string(version));
  }
  const std::uint8_t flags = *cur.take(1);
  if ((flags & ~kFlagSemantic) != 0) {
    fail(ErrorKind::FormatError, "unknown codebook flags");
  }
  const bool semantic = (flags & kFlagSemantic) != 0;

  const auto n_sets = cur.scalar<std::uint32_t>();
  const auto n_symbols = cur.scalar<std::uint32_t>();
  const auto total = cur.scalar<std::uint64_t>();
  if (n_symbols == 0 || n_sets == 0 || n_sets > n_symbols) {
    fail(ErrorKind::FormatError, "implausible codebook dimensions");
  }

  std::vector<std::string> tokens;
  std::vector<std::uint64_t> counts;
  std::vector<std::vector<std::uint32_t>> sets(n_sets);
  tokens.reserve(n_symbols);
  counts.reserve(n_symbols);
  std::uint64_t count_sum = 0;
  for (std::uint32_t id = 0; id < n_symbols; ++id) {
    const auto token_len = cur.scalar<std::uint16_t>();
    const std::uint8_t* p = cur.take(token_len);
    tokens.emplace_back(reinterpret_cast<const char*>(p), token_len);
    counts.push_back(cur.scalar<std::uint64_t>());
    count_sum += counts.back();
    const auto set_index = cur.scalar<std::uint32_t>();
    if (set_index >= n_sets) fail(ErrorKind::FormatError, "set index out of range");
    if (!semantic && set_index != id) {
      fail(ErrorKind::FormatError, "classical codebook with a non-identity partition");
    }
    sets[set_index].push_back(id);
  }
  if (count_sum != total) {
    fail(ErrorKind::FormatError, "symbol counts do not sum to the declared total");
  }

  std::vector<std::uint32_t> lengths(n_sets);
  for (std::uint32_t k = 0; k < n_sets; ++k) {
    lengths[k] = *cur.take(1);
    if (lengths[k] < 1 || lengths[k] > 64) {
      fail(ErrorKind::FormatError, "code length outside 1..64");
    }
  }
  if (cur.at != bytes.size()) {
    fail(ErrorKind::FormatError, "trailing bytes after codebook data");
  }
  for (const auto& set : sets) {
    if (set.empty()) fail(ErrorKind::FormatError, "synonymous set with no symbols");
  }

  CodebookBundle bundle;
  bundle.semantic = semantic;
  try {
    bundle.table = SymbolTable(std::move(tokens));
    bundle.codebook = codebook_from_lengths(lengths);
  } catch (const Error& e) {
    // Duplicate tokens or a Kraft-infeasible profile mean a broken file,
    // whatever the inner kind says.
    fail(ErrorKind::FormatError, e.what());
  }
  bundle.model.counts = std::move(counts);
  bundle.model.total = total;
  bundle.partition = SynonymousPartition::over(std::move(sets), n_symbols);
  return bundle;
}

}  // namespace semhuff
