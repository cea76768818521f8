// qstab: exact decision, construction, and certification of total stability
// conditions for type A quivers of arbitrary orientation.
//
// Exit codes: 0 = success / property true, 1 = property false (not totally
// stable, or a mismatch was found), 2 = malformed input.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qstab/qstab.hpp"

namespace {

using nlohmann::ordered_json;

std::string format_set(const std::vector<int>& vertices) {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(vertices[i]);
  }
  s += '}';
  return s;
}

std::string format_record(const qstab::inequality_record& rec) {
  return "mu[" + format_set(rec.lhs) + "] > mu[" + format_set(rec.rhs) + "]";
}

std::string format_csv(const qstab::rational_vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += qstab::to_string(v[i]);
  }
  return s;
}

std::string format_csv(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

ordered_json json_rationals(const qstab::rational_vector& v) {
  ordered_json arr = ordered_json::array();
  for (const qstab::rational& e : v) arr.push_back(qstab::to_string(e));
  return arr;
}

std::vector<qstab::rational> parse_csv_rationals(const std::string& text) {
  std::vector<qstab::rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string field = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (field.empty()) throw std::invalid_argument("empty field in rational list");
    out.push_back(qstab::parse_rational(field));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

qstab::central_charge parse_charge(const qstab::type_a_quiver& q, const std::string& w_text,
                                   const std::string& r_text) {
  auto w = parse_csv_rationals(w_text);
  auto r = parse_csv_rationals(r_text);
  if (static_cast<int>(w.size()) != q.n || static_cast<int>(r.size()) != q.n)
    throw std::invalid_argument("w and r must have one entry per vertex");
  return qstab::central_charge(std::move(w), std::move(r));
}

qstab::rational_vector parse_positive(const qstab::type_a_quiver& q, const std::string& r_text) {
  auto r = parse_csv_rationals(r_text);
  if (static_cast<int>(r.size()) != q.n)
    throw std::invalid_argument("r must have one entry per vertex");
  return r;
}

void emit(const std::string& format, const std::string& text, const ordered_json& machine) {
  if (format == "machine")
    std::cout << machine.dump() << '\n';
  else
    std::cout << text;
}

// Records violated by w over the fixed r, 1-based.
std::vector<int> violated_records(const qstab::type_a_quiver& q, const qstab::rational_vector& w,
                                  const qstab::rational_vector& r) {
  const qstab::central_charge z(w, r);
  const qstab::inequality_system sys = qstab::total_stability_inequalities(q);
  std::vector<int> out;
  for (std::size_t i = 0; i < sys.items.size(); ++i)
    if (!qstab::record_holds(z, sys.items[i])) out.push_back(static_cast<int>(i) + 1);
  return out;
}

int cmd_embed(const std::string& quiver, const std::string& format) {
  const auto q = qstab::parse_quiver(quiver);
  const auto em = qstab::staircase_embedding(q);
  ordered_json j{{"x", em.x}, {"y", em.y}};
  emit(format, "x: " + format_csv(em.x) + "\ny: " + format_csv(em.y) + "\n", j);
  return 0;
}

int cmd_levels(const std::string& quiver, const std::string& format) {
  const auto q = qstab::parse_quiver(quiver);
  const auto ld = qstab::level_sets(q);
  const auto join = [](const std::vector<std::vector<int>>& sets) {
    std::string s;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (i) s += ',';
      s += format_set(sets[i]);
    }
    return s;
  };
  std::string text = "X: " + join(ld.x_levels) + "\nY: " + join(ld.y_levels) +
                     "\nXtilde: " + join(ld.x_chains) + "\nYtilde: " + join(ld.y_chains) + "\n";
  ordered_json j{{"xLevels", ld.x_levels},
                 {"yLevels", ld.y_levels},
                 {"xChains", ld.x_chains},
                 {"yChains", ld.y_chains}};
  emit(format, text, j);
  return 0;
}

int cmd_opposite(const std::string& quiver, const std::string& format) {
  const auto q = qstab::opposite(qstab::parse_quiver(quiver));
  emit(format, q.arrows + "\n", ordered_json{{"quiver", q.arrows}});
  return 0;
}

int cmd_inequalities(const std::string& quiver, const std::string& format) {
  const auto q = qstab::parse_quiver(quiver);
  const auto sys = qstab::total_stability_inequalities(q);
  std::string text;
  ordered_json items = ordered_json::array();
  for (const auto& rec : sys.items) {
    text += format_record(rec) + "\n";
    items.push_back(ordered_json{{"lhs", rec.lhs}, {"rhs", rec.rhs}});
  }
  emit(format, text, ordered_json{{"items", items}});
  return 0;
}

int cmd_check(const std::string& quiver, const std::string& w_text, const std::string& r_text,
              bool with_oracle, const std::string& format) {
  const auto q = qstab::parse_quiver(quiver);
  const auto z = parse_charge(q, w_text, r_text);
  const std::optional<int> violated = qstab::first_violation(q, z);
  if (with_oracle) {
    const bool oracle = qstab::is_totally_stable_oracle(q, z);
    if (oracle == violated.has_value()) {
      std::cerr << "ORACLE_MISMATCH: fast=" << (violated ? "NOT_TOTALLY_STABLE" : "TOTALLY_STABLE")
                << " oracle=" << (oracle ? "TOTALLY_STABLE" : "NOT_TOTALLY_STABLE") << "\n";
      return 1;
    }
  }
  if (!violated) {
    emit(format, "TOTALLY_STABLE\n", ordered_json{{"verdict", "TOTALLY_STABLE"}});
    return 0;
  }
  const auto sys = qstab::total_stability_inequalities(q);
  const auto& rec = sys.items[static_cast<std::size_t>(*violated - 1)];
  ordered_json j{{"verdict", "NOT_TOTALLY_STABLE"},
                 {"violated", ordered_json{{"index", *violated}, {"lhs", rec.lhs}, {"rhs", rec.rhs}}}};
  emit(format, "NOT_TOTALLY_STABLE: " + format_record(rec) + "\n", j);
  return 1;
}

int cmd_construct(const std::string& quiver, const std::string& r_text, const std::string& format) {
  const auto q = qstab::parse_quiver(quiver);
  const auto r = parse_positive(q, r_text);
  const auto w = qstab::construct_total_weight(q, r);
  emit(format, format_csv(w) + "\n", ordered_json{{"w", json_rationals(w)}});
  return 0;
}

int cmd_witness(const std::string& quiver, const std::string& r_text, int k,
                const std::string& format) {
  const auto q = qstab::parse_quiver(quiver);
  const auto r = parse_positive(q, r_text);
  const auto w = qstab::minimality_witness(q, r, k);
  const std::vector<int> violated = violated_records(q, w, r);
  if (violated.size() != 1 || violated[0] != k) {
    std::cerr << "WITNESS_INVALID: expected exactly record " << k << " violated, got {"
              << format_csv(violated) << "}\n";
    return 1;
  }
  emit(format, "w: " + format_csv(w) + "\nviolated: " + std::to_string(k) + "\n",
       ordered_json{{"w", json_rationals(w)}, {"violated", k}});
  return 0;
}

int cmd_sweep(int max_n, long long samples, std::uint64_t seed, const std::string& format) {
  qstab::charge_sampler sampler(seed);
  long long quivers = 0, cases = 0, mismatches = 0;
  bool validations_ok = true;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& q : qstab::all_orientations(n)) {
      ++quivers;
      for (long long s = 0; s < samples; ++s) {
        const auto z = sampler.charge(n);
        ++cases;
        if (qstab::is_totally_stable_fast(q, z) != qstab::is_totally_stable_oracle(q, z)) {
          ++mismatches;
          std::cerr << "mismatch: quiver=" << q.arrows << " w=" << format_csv(z.w)
                    << " r=" << format_csv(z.r) << "\n";
        }
      }
      const qstab::rational_vector ones(static_cast<std::size_t>(n), qstab::rational(1));
      for (const auto& r : {ones, sampler.positive_vector(n)}) {
        const auto w = qstab::construct_total_weight(q, r);
        const qstab::central_charge z(w, r);
        if (!qstab::is_totally_stable_fast(q, z) || !qstab::is_totally_stable_oracle(q, z)) {
          validations_ok = false;
          std::cerr << "construction failed: quiver=" << q.arrows << " r=" << format_csv(r) << "\n";
        }
      }
      for (int k = 1; k <= n - 1; ++k) {
        const auto w = qstab::minimality_witness(q, ones, k);
        const std::vector<int> violated = violated_records(q, w, ones);
        if (violated.size() != 1 || violated[0] != k) {
          validations_ok = false;
          std::cerr << "witness failed: quiver=" << q.arrows << " k=" << k << "\n";
        }
      }
    }
  }
  const std::string text = "quivers=" + std::to_string(quivers) + " cases=" + std::to_string(cases) +
                           " mismatches=" + std::to_string(mismatches) + "\n";
  emit(format, text,
       ordered_json{{"quivers", quivers}, {"cases", cases}, {"mismatches", mismatches}});
  return (mismatches == 0 && validations_ok) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact total-stability toolkit for type A quivers"};
  app.require_subcommand(1);

  std::string quiver, w_text, r_text, format = "text";
  int k = 1, n = 1;
  long long samples = 1;
  std::uint64_t seed = 0;
  bool with_oracle = false;

  const auto add_common = [&](CLI::App* sub, bool wants_quiver) {
    if (wants_quiver)
      sub->add_option("--quiver", quiver, "orientation word over {R,L}; empty for A_1");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));
    return sub;
  };

  auto* embed = add_common(app.add_subcommand("embed", "staircase coordinates x, y"), true);
  auto* levels = add_common(app.add_subcommand("levels", "level sets and nested chains"), true);
  auto* oppo = add_common(app.add_subcommand("opposite", "reverse all arrows"), true);
  auto* ineqs = add_common(
      app.add_subcommand("inequalities", "the n-1 defining slope inequalities"), true);

  auto* check = add_common(app.add_subcommand("check", "decide total stability of (w, r)"), true);
  check->add_option("--w", w_text, "weight vector, comma-separated rationals")->required();
  check->add_option("--r", r_text, "positive vector, comma-separated rationals")->required();
  check->add_flag("--oracle", with_oracle, "cross-check against the brute-force oracle");

  auto* construct = add_common(
      app.add_subcommand("construct", "build w with (w, r) totally stable"), true);
  construct->add_option("--r", r_text, "positive vector, comma-separated rationals")->required();

  auto* witness = add_common(
      app.add_subcommand("witness", "build w violating exactly one inequality"), true);
  witness->add_option("--r", r_text, "positive vector, comma-separated rationals")->required();
  witness->add_option("--k", k, "1-based record index to violate")->required();

  auto* sweep = add_common(app.add_subcommand("sweep", "fast-vs-oracle sweep over A_1..A_n"), false);
  sweep->add_option("--n", n, "largest vertex count")->required()->check(CLI::Range(1, 7));
  sweep->add_option("--samples", samples, "charges per orientation")
      ->required()
      ->check(CLI::Range(1LL, 1000000LL));
  sweep->add_option("--seed", seed, "sampler seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (embed->parsed()) return cmd_embed(quiver, format);
    if (levels->parsed()) return cmd_levels(quiver, format);
    if (oppo->parsed()) return cmd_opposite(quiver, format);
    if (ineqs->parsed()) return cmd_inequalities(quiver, format);
    if (check->parsed()) return cmd_check(quiver, w_text, r_text, with_oracle, format);
    if (construct->parsed()) return cmd_construct(quiver, r_text, format);
    if (witness->parsed()) return cmd_witness(quiver, r_text, k, format);
    if (sweep->parsed()) return cmd_sweep(n, samples, seed, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
