#include "semhuff/codec.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>

#include "semhuff/bitio.hpp"
#include "semhuff/corpus.hpp"
#include "semhuff/kernels.hpp"

namespace semhuff {

namespace {

constexpr char kMagic[4] = {'S', 'H', 'C', '1'};
constexpr std::uint8_t kVersion = 1;
constexpr std::size_t kHeaderBytes = 21;

std::uint64_t payload_bytes_for(std::uint64_t bits) { return (bits + 7) / 8; }

// Canonical decoding tables: units sorted by (length, unit) carry
// consecutive code values, so one comparison per length step finds the hit.
struct CanonicalDecoder {
  std::uint32_t min_len = 0;
  std::uint32_t max_len = 0;
  std::vector<std::uint64_t> first_code;   // per length
  std::vector<std::uint64_t> first_rank;   // per length
  std::vector<std::uint64_t> count;        // per length
  std::vector<std::uint32_t> unit_by_rank;

  explicit CanonicalDecoder(const Codebook& book) {
    const std::size_t n = book.entries.size();
    unit_by_rank.resize(n);
    std::iota(unit_by_rank.begin(), unit_by_rank.end(), 0);
    std::stable_sort(unit_by_rank.begin(), unit_by_rank.end(),
                     [&](std::uint32_t x, std::uint32_t y) {
                       return book.entries[x].length < book.entries[y].length;
                     });
    min_len = book.entries[unit_by_rank.front()].length;
    max_len = book.entries[unit_by_rank.back()].length;
    first_code.assign(max_len + 1, 0);
    first_rank.assign(max_len + 1, 0);
    count.assign(max_len + 1, 0);
    for (std::size_t rank = 0; rank < n; ++rank) {
      const CodeEntry& e = book.entries[unit_by_rank[rank]];
      if (count[e.length] == 0) {
        first_code[e.length] = e.bits;
        first_rank[e.length] = rank;
      }
      ++count[e.length];
    }
  }
};

struct SplitMix64 {
  std::uint64_t state;
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

// Exactly uniform draw in [0, n) via rejection.
std::uint64_t bounded(SplitMix64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = rng.next();
    if (r >= threshold) return r % n;
  }
}

}  // namespace

BitContainer encode(std::span<const std::string> tokens, const SymbolTable& table,
                    const SynonymousPartition& partition, const Codebook& codebook) {
  if (!partition.well_formed() || partition.symbol_count() != table.size()) {
    fail(ErrorKind::InvalidInput, "partition does not match the symbol table");
  }
  if (codebook.unit_count() != partition.set_count()) {
    fail(ErrorKind::InvalidInput, "codebook units do not match the partition sets");
  }

  std::vector<std::uint32_t> units = token_ids(tokens, table);
  for (auto& u : units) u = partition.set_of(u);

  BitContainer container;
  container.token_count = tokens.size();
  container.payload =
      kernels::pack_codewords(units, codebook.entries, container.payload_bit_length);
  return container;
}

std::vector<std::uint32_t> decode(const BitContainer& container, const Codebook& codebook) {
  if (container.payload.size() != payload_bytes_for(container.payload_bit_length)) {
    fail(ErrorKind::FormatError, "payload byte count does not match the declared bit length");
  }
  std::vector<std::uint32_t> out;
  BitReader reader(container.payload, container.payload_bit_length);

  if (container.token_count > 0) {
    if (codebook.entries.empty()) {
      fail(ErrorKind::FormatError, "cannot decode against an empty codebook");
    }
    const CanonicalDecoder dec(codebook);
    out.reserve(container.token_count);

    for (std::uint64_t i = 0; i < container.token_count; ++i) {
      std::uint64_t code = 0;
      std::uint32_t len = 0;
      for (;;) {
        const int bit = reader.next();
        if (bit < 0) {
          fail(ErrorKind::TruncatedStream,
               "payload ended inside codeword " + std::to_string(i));
        }
        code = (code << 1) | static_cast<unsigned>(bit);
        ++len;
        if (len >= dec.min_len && len <= dec.max_len && dec.count[len] != 0 &&
            code >= dec.first_code[len] && code - dec.first_code[len] < dec.count[len]) {
          out.push_back(dec.unit_by_rank[dec.first_rank[len] + (code - dec.first_code[len])]);
          break;
        }
        if (len >= dec.max_len) {
          fail(ErrorKind::FormatError, "bit pattern matches no codeword");
        }
      }
    }
  }

  // Anything left must be under a byte of zero padding.
  if (reader.remaining() >= 8) {
    fail(ErrorKind::TrailingGarbage, "payload declares more bits than the tokens use");
  }
  while (reader.remaining() > 0) {
    if (reader.next() != 0) {
      fail(ErrorKind::TrailingGarbage, "nonzero bits after the last codeword");
    }
  }
  return out;
}

std::vector<std::string> reconstruct(std::span<const std::uint32_t> set_sequence,
                                     const SetDistribution& dist,
                                     const SynonymousPartition& partition,
                                     const SymbolTable& table,
                                     const ReconstructionPolicy& policy) {
  std::vector<std::string> out;
  out.reserve(set_sequence.size());
  const auto& sets = partition.sets();
  for (std::size_t pos = 0; pos < set_sequence.size(); ++pos) {
    const std::uint32_t k = set_sequence[pos];
    if (k >= sets.size()) fail(ErrorKind::InvalidInput, "set index out of range");
    std::uint32_t id;
    if (policy.kind == SelectionKind::MaxProbability) {
      id = dist.representative[k];
    } else {
      // Keyed on (seed, position): reproducible and independent of
      // iteration order.
      SplitMix64 rng{policy.seed ^ ((pos + 1) * 0xD1B54A32D192ED03ull)};
      const auto& members = sets[k];
      id = members[bounded(rng, members.size())];
    }
    out.emplace_back(table.token(id));
  }
  return out;
}

std::vector<std::uint8_t> write_container(const BitContainer& container) {
  if (container.payload.size() != payload_bytes_for(container.payload_bit_length)) {
    fail(ErrorKind::FormatError, "payload byte count does not match the declared bit length");
  }
  std::vector<std::uint8_t> out;
  out.reserve(kHeaderBytes + container.payload.size());
  out.insert(out.end(), kMagic, kMagic + 4);
  out.push_back(kVersion);
  put_le<std::uint64_t>(out, container.token_count);
  put_le<std::uint64_t>(out, container.payload_bit_length);
  out.insert(out.end(), container.payload.begin(), container.payload.end());
  return out;
}

BitContainer read_container(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderBytes) fail(ErrorKind::FormatError, "container header truncated");
  if (std::memcmp(bytes.data(), kMagic, 4) != 0) {
    fail(ErrorKind::FormatError, "bad container magic");
  }
  if (bytes[4] != kVersion) {
    fail(ErrorKind::FormatError, "unsupported container version " + std::to_string(bytes[4]));
  }

  BitContainer container;
  container.token_count = get_le<std::uint64_t>(bytes.data() + 5);
  container.payload_bit_length = get_le<std::uint64_t>(bytes.data() + 13);
  const std::uint64_t expected = payload_bytes_for(container.payload_bit_length);
  if (bytes.size() - kHeaderBytes != expected) {
    fail(ErrorKind::FormatError, "payload length does not match the declared bit length");
  }
  container.payload.assign(bytes.begin() + kHeaderBytes, bytes.end());

  const std::uint32_t pad = static_cast<std::uint32_t>(container.payload_bit_length & 7u);
  if (pad != 0 && (container.payload.back() & (0xFFu >> pad)) != 0) {
    fail(ErrorKind::FormatError, "nonzero padding bits in final payload byte");
  }
  return container;
}

}  // namespace semhuff
