#include "semhuff/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "semhuff/codebook_io.hpp"
#include "semhuff/codec.hpp"
#include "semhuff/corpus.hpp"
#include "semhuff/entropy.hpp"
#include "semhuff/metrics.hpp"
#include "semhuff/tree.hpp"

namespace semhuff::cli {

namespace {

// ordered_json keeps key/value lines in the order they are added.
using json = nlohmann::ordered_json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::IoError, "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) fail(ErrorKind::IoError, "read failure on '" + path + "'");
  return std::move(buffer).str();
}

std::vector<std::uint8_t> read_binary_file(const std::string& path) {
  const std::string data = read_text_file(path);
  return std::vector<std::uint8_t>(data.begin(), data.end());
}

void write_file(const std::string& path, const void* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::IoError, "cannot open '" + path + "' for writing");
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  if (!out) fail(ErrorKind::IoError, "write failure on '" + path + "'");
}

std::string fmt(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

ReconstructionPolicy make_policy(const std::string& name, std::uint64_t seed) {
  if (name == "max-prob") return ReconstructionPolicy::max_probability();
  if (name == "random") return ReconstructionPolicy::seeded_random(seed);
  fail(ErrorKind::InvalidInput, "unknown policy '" + name + "' (use max-prob or random)");
}

// Everything the subcommands derive from a corpus (+ optional thesaurus).
struct Pipeline {
  TokenSequence tokens;
  std::vector<std::uint32_t> ids;
  CodebookBundle bundle;       // semantic codebook over the partition
  Codebook classical;          // codebook over the raw symbols
  SetDistribution dist;
};

Pipeline run_pipeline(const std::string& corpus_path,
                      const std::optional<std::string>& thesaurus_path) {
  Pipeline p;
  p.tokens = tokenize(read_text_file(corpus_path));
  CorpusStats stats = count_frequencies(p.tokens);
  p.ids = token_ids(p.tokens, stats.table);

  SynonymousPartition partition =
      thesaurus_path ? parse_thesaurus(read_text_file(*thesaurus_path), stats.table)
                     : SynonymousPartition::identity(stats.table.size());

  p.bundle.semantic = thesaurus_path.has_value();
  p.bundle.table = std::move(stats.table);
  p.bundle.model = std::move(stats.model);
  p.bundle.partition = std::move(partition);
  p.dist = aggregate_probabilities(p.bundle.model, p.bundle.partition);
  p.bundle.codebook = derive_codebook(build_huffman_tree(p.dist.set_counts));
  p.classical = derive_codebook(build_huffman_tree(p.bundle.model.counts));
  return p;
}

json entropy_json(const Pipeline& p) {
  const EntropyReport e = entropy_report(p.bundle.model, p.dist);
  return json{
      {"tokens", p.bundle.model.total},
      {"symbols", p.bundle.table.size()},
      {"sets", p.bundle.partition.set_count()},
      {"semantic", p.bundle.semantic},
      {"information_entropy_bits", e.information_entropy_bits},
      {"semantic_entropy_sebits", e.semantic_entropy_sebits},
      {"classical_avg_bits", average_code_length(p.classical, p.bundle.model.counts)},
      {"semantic_avg_sebits", average_code_length(p.bundle.codebook, p.dist.set_counts)},
  };
}

void print_kv(std::ostream& out, const json& object) {
  for (const auto& [key, value] : object.items()) {
    if (value.is_number_float()) {
      out << key << ": " << fmt(value.get<double>()) << "\n";
    } else {
      out << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(std::ostream& out, const json& object, bool as_json) {
  if (as_json) {
    out << object.dump(2) << "\n";
  } else {
    print_kv(out, object);
  }
}

int cmd_build(const std::string& corpus, const std::optional<std::string>& thesaurus,
              const std::string& output, bool as_json, std::ostream& out) {
  Pipeline p = run_pipeline(corpus, thesaurus);
  const std::vector<std::uint8_t> bytes = write_codebook(p.bundle);
  write_file(output, bytes.data(), bytes.size());

  json summary = entropy_json(p);
  summary["codebook"] = output;
  summary["codebook_bytes"] = bytes.size();
  emit(out, summary, as_json);
  return 0;
}

int cmd_encode(const std::string& corpus, const std::string& codebook_path,
               const std::string& output, bool as_json, std::ostream& out) {
  const CodebookBundle bundle = read_codebook(read_binary_file(codebook_path));
  const TokenSequence tokens = tokenize(read_text_file(corpus));
  const BitContainer container = encode(tokens, bundle.table, bundle.partition, bundle.codebook);
  const std::vector<std::uint8_t> bytes = write_container(container);
  write_file(output, bytes.data(), bytes.size());

  emit(out,
       json{{"tokens", container.token_count},
            {"payload_bits", container.payload_bit_length},
            {"container_bytes", bytes.size()},
            {"container", output}},
       as_json);
  return 0;
}

int cmd_decode(const std::string& input, const std::string& codebook_path,
               const std::optional<std::string>& output, const std::string& policy_name,
               std::uint64_t seed, std::ostream& out) {
  const CodebookBundle bundle = read_codebook(read_binary_file(codebook_path));
  const BitContainer container = read_container(read_binary_file(input));
  const std::vector<std::uint32_t> sets = decode(container, bundle.codebook);
  const SetDistribution dist = bundle.distribution();
  const ReconstructionPolicy policy = make_policy(policy_name, seed);
  const std::vector<std::string> tokens =
      reconstruct(sets, dist, bundle.partition, bundle.table, policy);
  const std::string text = detokenize(tokens);

  if (output) {
    write_file(*output, text.data(), text.size());
  } else {
    out << text << "\n";
  }
  return 0;
}

int cmd_report(const std::string& corpus, const std::optional<std::string>& thesaurus,
               bool as_json, std::ostream& out, std::ostream& err) {
  Pipeline p = run_pipeline(corpus, thesaurus);

  const CompressionReport comp = compression_report(p.bundle.model, p.bundle.partition,
                                                    p.classical, p.bundle.codebook, p.ids);

  // Round trip in memory, then score both reconstruction policies.
  const BitContainer container =
      encode(p.tokens, p.bundle.table, p.bundle.partition, p.bundle.codebook);
  const std::vector<std::uint32_t> sets = decode(container, p.bundle.codebook);

  DistortionReport distortion[2];
  const ReconstructionPolicy policies[2] = {ReconstructionPolicy::max_probability(),
                                            ReconstructionPolicy::seeded_random(0)};
#pragma omp parallel for num_threads(2) schedule(static, 1)
  for (int i = 0; i < 2; ++i) {
    const std::vector<std::string> hyp =
        reconstruct(sets, p.dist, p.bundle.partition, p.bundle.table, policies[i]);
    distortion[i] = distortion_report(p.tokens, hyp, p.bundle.table, p.bundle.partition);
  }

  auto distortion_json = [](const DistortionReport& d) {
    return json{{"bleu", d.bleu},
                {"wer", d.wer},
                {"semantic_lossless", d.semantic_lossless},
                {"mismatch_count", d.mismatch_positions.size()}};
  };

  if (as_json) {
    emit(out,
         json{{"compression",
               json{{"token_count", comp.token_count},
                    {"classical_total_bits", comp.classical_total_bits},
                    {"semantic_total_sebits", comp.semantic_total_sebits},
                    {"classical_avg", comp.classical_avg},
                    {"semantic_avg", comp.semantic_avg},
                    {"information_entropy_bits", comp.information_entropy_bits},
                    {"semantic_entropy_sebits", comp.semantic_entropy_sebits},
                    {"savings_fraction", comp.savings_fraction}}},
              {"distortion",
               json{{"max_probability", distortion_json(distortion[0])},
                    {"random", distortion_json(distortion[1])}}}},
         true);
  } else {
    json flat{{"token_count", comp.token_count},
              {"classical_total_bits", comp.classical_total_bits},
              {"semantic_total_sebits", comp.semantic_total_sebits},
              {"classical_avg", comp.classical_avg},
              {"semantic_avg", comp.semantic_avg},
              {"information_entropy_bits", comp.information_entropy_bits},
              {"semantic_entropy_sebits", comp.semantic_entropy_sebits},
              {"savings_fraction", comp.savings_fraction}};
    const char* suffix[2] = {"max_probability", "random"};
    for (int i = 0; i < 2; ++i) {
      flat[std::string("bleu_") + suffix[i]] = distortion[i].bleu;
      flat[std::string("wer_") + suffix[i]] = distortion[i].wer;
      flat[std::string("semantic_lossless_") + suffix[i]] = distortion[i].semantic_lossless;
      flat[std::string("mismatch_count_") + suffix[i]] = distortion[i].mismatch_positions.size();
    }
    print_kv(out, flat);
  }

  // Cross-module guarantees; a violation here means the report cannot be
  // trusted, so fail loudly instead of printing plausible numbers.
  std::vector<std::string> broken;
  if (comp.semantic_entropy_sebits > comp.information_entropy_bits + 1e-12) {
    broken.push_back("semantic entropy exceeds information entropy");
  }
  if (!check_vlc_bounds(comp.semantic_avg, comp.semantic_entropy_sebits, 2)) {
    broken.push_back("semantic average length outside entropy bounds");
  }
  if (comp.semantic_total_sebits > comp.classical_total_bits) {
    broken.push_back("semantic code longer than classical code");
  }
  for (const Codebook* book : {&p.classical, &p.bundle.codebook}) {
    const auto lengths = book->lengths();
    const KraftResult kraft = kraft_sum(lengths, 2);
    if (std::abs(kraft.sum - 1.0) > 1e-12) broken.push_back("codebook Kraft sum is not 1");
  }
  for (int i = 0; i < 2; ++i) {
    if (!distortion[i].semantic_lossless) broken.push_back("reconstruction left its set");
  }
  for (const std::string& problem : broken) err << "invariant violated: " << problem << "\n";
  return broken.empty() ? 0 : 1;
}

int cmd_verify(const std::string& codebook_path, bool as_json, std::ostream& out) {
  const CodebookBundle bundle = read_codebook(read_binary_file(codebook_path));
  const std::vector<std::uint32_t> lengths = bundle.codebook.lengths();

  const KraftResult kraft = kraft_sum(lengths, bundle.codebook.radix);

  // Canonical form: lengths alone must reproduce the codewords.
  bool canonical_ok = true;
  const Codebook rebuilt = codebook_from_lengths(lengths);
  for (std::uint32_t k = 0; k < bundle.codebook.unit_count(); ++k) {
    canonical_ok &= rebuilt.entries[k].bits == bundle.codebook.entries[k].bits &&
                    rebuilt.entries[k].length == bundle.codebook.entries[k].length;
  }

  // Monotonicity: a more probable set never has a longer codeword.
  const SetDistribution dist = bundle.distribution();
  std::vector<std::uint32_t> order(dist.set_counts.size());
  for (std::uint32_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return dist.set_counts[a] > dist.set_counts[b];
  });
  bool monotone_ok = true;
  std::uint32_t max_len_so_far = 0;
  std::size_t at = 0;
  while (at < order.size()) {
    std::size_t group_end = at;
    std::uint32_t group_max = 0;
    while (group_end < order.size() &&
           dist.set_counts[order[group_end]] == dist.set_counts[order[at]]) {
      const std::uint32_t len = lengths[order[group_end]];
      monotone_ok &= len >= max_len_so_far;
      group_max = std::max(group_max, len);
      ++group_end;
    }
    max_len_so_far = std::max(max_len_so_far, group_max);
    at = group_end;
  }

  const bool ok = kraft.satisfied && canonical_ok && monotone_ok;
  emit(out,
       json{{"sets", bundle.partition.set_count()},
            {"symbols", bundle.table.size()},
            {"semantic", bundle.semantic},
            {"kraft_sum", kraft.sum},
            {"kraft_ok", kraft.satisfied},
            {"canonical_ok", canonical_ok},
            {"monotone_ok", monotone_ok}},
       as_json);
  return ok ? 0 : 1;
}

bool is_validation_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput:
    case ErrorKind::InvalidDistribution:
    case ErrorKind::EmptyModel:
    case ErrorKind::EmptyCorpus:
    case ErrorKind::UnknownToken:
    case ErrorKind::DisjointnessViolation:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semantic Huffman coding over synonymous sets"};
  app.name("semhuff");
  app.require_subcommand(1);

  std::string corpus, output, codebook_path, input;
  std::optional<std::string> thesaurus, decode_output;
  std::string policy = "max-prob";
  std::uint64_t seed = 0;
  bool as_json = false;

  auto* build = app.add_subcommand("build", "Build a codebook from a corpus");
  build->add_option("-c,--corpus", corpus, "UTF-8 corpus file")->required();
  build->add_option("-t,--thesaurus", thesaurus,
                    "synonymous sets, one per line (omit for a classical codebook)");
  build->add_option("-o,--output", output, "codebook file to write (.scb)")->required();
  build->add_flag("--json", as_json, "machine-readable output");

  auto* enc = app.add_subcommand("encode", "Encode a corpus against a codebook");
  enc->add_option("-c,--corpus", corpus, "UTF-8 corpus file")->required();
  enc->add_option("-b,--codebook", codebook_path, "codebook file (.scb)")->required();
  enc->add_option("-o,--output", output, "container file to write (.shc)")->required();
  enc->add_flag("--json", as_json, "machine-readable output");

  auto* dec = app.add_subcommand("decode", "Decode a container back to text");
  dec->add_option("-i,--input", input, "container file (.shc)")->required();
  dec->add_option("-b,--codebook", codebook_path, "codebook file (.scb)")->required();
  dec->add_option("-o,--output", decode_output, "output text file (default: stdout)");
  dec->add_option("--policy", policy, "token selection: max-prob | random");
  dec->add_option("--seed", seed, "seed for the random policy");

  auto* rep = app.add_subcommand("report", "Compression and distortion report");
  rep->add_option("-c,--corpus", corpus, "UTF-8 corpus file")->required();
  rep->add_option("-t,--thesaurus", thesaurus, "synonymous sets, one per line");
  rep->add_flag("--json", as_json, "machine-readable output");

  auto* ver = app.add_subcommand("verify", "Check a codebook file");
  ver->add_option("-b,--codebook", codebook_path, "codebook file (.scb)")->required();
  ver->add_flag("--json", as_json, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);  // prints the right help text, returns 0
  } catch (const CLI::ParseError& e) {
    err << "semhuff: " << e.what() << "\n";
    return 2;
  }

  try {
    if (build->parsed()) return cmd_build(corpus, thesaurus, output, as_json, out);
    if (enc->parsed()) return cmd_encode(corpus, codebook_path, output, as_json, out);
    if (dec->parsed()) return cmd_decode(input, codebook_path, decode_output, policy, seed, out);
    if (rep->parsed()) return cmd_report(corpus, thesaurus, as_json, out, err);
    if (ver->parsed()) return cmd_verify(codebook_path, as_json, out);
  } catch (const Error& e) {
    err << "semhuff: " << e.what() << "\n";
    return is_validation_error(e.kind()) ? 1 : 2;
  } catch (const std::exception& e) {
    err << "semhuff: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace semhuff::cli
