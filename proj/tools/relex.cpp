#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "relex/inference.hpp"
#include "relex/io.hpp"

namespace {

using namespace relex;

void emit_error(const std::string& msg) {
  nlohmann::json j;
  j["error"] = msg;
  std::cerr << j.dump() << '\n';
}

void write_seq_out(const std::string& out, const RelSequence& x) {
  if (out.empty())
    write_sequence(std::cout, x);
  else
    write_sequence_file(out, x);
}

std::vector<std::size_t> parse_sigma_list(const std::string& text) {
  std::vector<std::size_t> sigma;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    sigma.push_back(std::stoull(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return sigma;
}

SequenceSampler sampler_for(const Model& model) {
  return std::visit(
      [](const auto& m) -> SequenceSampler {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SimplexPoint>)
          return [m](std::size_t k, Rng& r) { return sample_epsilon_f(m, k, r); };
        else
          return
              [m](std::size_t k, Rng& r) { return sample_epsilon_phi(m, k, r); };
      },
      model);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relational sequence toolkit: sample, canonicalize, estimate, test"};
  app.require_subcommand(1);

  std::string model_path, in_path, out_path, a_path, b_path, sigma_text, mode = "exact";
  std::size_t n = 4, samples = 10000, seed = 0, restrict_n = 0;
  std::optional<std::size_t> depth;
  int threshold = 2;
  bool summary = false, undirected = false;

  auto* cmd_sample = app.add_subcommand("sample", "draw one sequence from a model");
  cmd_sample->add_option("--model", model_path, "model JSON file")->required();
  cmd_sample->add_option("--n", n, "sequence length")->required();
  cmd_sample->add_option("--seed", seed, "rng seed");
  cmd_sample->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_canon = app.add_subcommand("canon", "rewrite a sequence in canonical form");
  cmd_canon->add_option("--in", in_path, "sequence file")->required();
  cmd_canon->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_estimate = app.add_subcommand("estimate", "estimate the generating model");
  cmd_estimate->add_option("--in", in_path, "sequence file")->required();
  cmd_estimate->add_option("--threshold", threshold, "recurrence threshold");
  cmd_estimate->add_option("--out", out_path, "model output file");
  cmd_estimate->add_flag("--summary", summary, "print a code-frequency table");

  auto* cmd_test = app.add_subcommand("test-exch", "positional invariance test");
  cmd_test->add_option("--model", model_path, "model JSON file")->required();
  cmd_test->add_option("--n", n, "sequence length");
  cmd_test->add_option("--mode", mode, "exact or mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  cmd_test->add_option("--samples", samples, "draws per group (mc mode)");
  cmd_test->add_option("--seed", seed, "rng seed (mc mode)");
  cmd_test->add_option("--sigma", sigma_text,
                       "comma-separated permutation (mc mode; default reversal)");

  auto* cmd_roundtrip =
      app.add_subcommand("roundtrip", "label/recode round-trip check");
  cmd_roundtrip->add_option("--in", in_path, "sequence file")->required();
  cmd_roundtrip->add_option("--seed", seed, "rng seed");

  auto* cmd_restrict = app.add_subcommand("restrict", "keep the first n items");
  cmd_restrict->add_option("--in", in_path, "sequence file")->required();
  cmd_restrict->add_option("--n", restrict_n, "prefix length")->required();
  cmd_restrict->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_dist = app.add_subcommand("dist", "distance between two sequences");
  cmd_dist->add_option("--a", a_path, "first sequence file")->required();
  cmd_dist->add_option("--b", b_path, "second sequence file")->required();
  cmd_dist->add_option("--depth", depth, "comparison depth cap");

  auto* cmd_import =
      app.add_subcommand("import-edges", "read a src/dst edge list");
  cmd_import->add_option("--in", in_path, "edge list file")->required();
  cmd_import->add_flag("--undirected", undirected, "store both orientations");
  cmd_import->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    emit_error(e.what());
    return 1;
  }

  try {
    if (app.got_subcommand(cmd_sample)) {
      Model model = parse_model_file(model_path);
      Rng rng(seed);
      CanonicalSequence x = std::visit(
          [&](const auto& m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, SimplexPoint>)
              return sample_epsilon_f(m, n, rng);
            else
              return sample_epsilon_phi(m, n, rng);
          },
          model);
      write_seq_out(out_path, x.as_rel_sequence());
    } else if (app.got_subcommand(cmd_canon)) {
      CanonicalSequence x = canonical_form(parse_sequence_file(in_path));
      write_seq_out(out_path, x.as_rel_sequence());
    } else if (app.got_subcommand(cmd_estimate)) {
      CanonicalSequence x = canonical_form(parse_sequence_file(in_path));
      SimplexPoint fhat = estimate_f(x, threshold);
      if (!out_path.empty()) write_model_file(out_path, fhat);
      if (summary) {
        for (const auto& [key, entry] : fhat.support())
          std::cout << key << '\t' << format_rational(entry.weight) << '\n';
      } else if (out_path.empty()) {
        write_model(std::cout, fhat);
      }
    } else if (app.got_subcommand(cmd_test)) {
      Model model = parse_model_file(model_path);
      if (mode == "exact") {
        ClassDistribution dist = std::visit(
            [&](const auto& m) { return exact_distribution(m, n); }, model);
        std::cout << to_json(exchangeability_report(dist)) << '\n';
      } else {
        std::vector<std::size_t> sigma;
        if (sigma_text.empty())
          for (std::size_t i = n; i >= 1; --i) sigma.push_back(i);
        else
          sigma = parse_sigma_list(sigma_text);
        Rng rng(seed);
        Chi2Report report =
            test_exchangeability_mc(sampler_for(model), n, sigma, samples, rng);
        std::cout << to_json(report) << '\n';
      }
    } else if (app.got_subcommand(cmd_roundtrip)) {
      CanonicalSequence x = canonical_form(parse_sequence_file(in_path));
      Rng rng(seed);
      bool ok = roundtrip_check(x, rng);
      nlohmann::json j;
      j["ok"] = ok;
      std::cout << j.dump() << '\n';
      return ok ? 0 : 1;
    } else if (app.got_subcommand(cmd_restrict)) {
      CanonicalSequence x = canonical_form(parse_sequence_file(in_path));
      write_seq_out(out_path, restrict(x, restrict_n).as_rel_sequence());
    } else if (app.got_subcommand(cmd_dist)) {
      CanonicalSequence xa = canonical_form(parse_sequence_file(a_path));
      CanonicalSequence xb = canonical_form(parse_sequence_file(b_path));
      nlohmann::json j;
      j["distance"] = format_rational(distance(xa, xb, depth));
      std::cout << j.dump() << '\n';
    } else if (app.got_subcommand(cmd_import)) {
      write_seq_out(out_path, parse_edge_list_file(in_path, !undirected));
    }
  } catch (const std::exception& e) {
    emit_error(e.what());
    return 1;
  }
  return 0;
}
