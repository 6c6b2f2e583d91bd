// suptrop: command-line front end.
//
// Exit codes: 0 success, 1 input or domain error, 2 failed verification
// (a property failure in `check`, or an internal self-check).

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json_format.hpp"
#include "suptrop/suptrop.hpp"

namespace {

using namespace suptrop;
using nlohmann::ordered_json;

constexpr int kExitDomain = 1;
constexpr int kExitVerification = 2;

bool stdin_used = false;

std::string read_source(const std::string& src) {
  std::ostringstream os;
  if (src == "-") {
    if (stdin_used) throw DomainError("stdin ('-') can only be used for one input");
    stdin_used = true;
    os << std::cin.rdbuf();
    return os.str();
  }
  if (std::filesystem::is_regular_file(src)) {
    std::ifstream in(src);
    if (!in) throw DomainError("cannot read '" + src + "'");
    os << in.rdbuf();
    return os.str();
  }
  // Inline matrix: rows separated by ';'.
  if (src.find_first_of("; \t") != std::string::npos) {
    std::string text = src;
    for (auto& c : text)
      if (c == ';') c = '\n';
    return text;
  }
  throw DomainError("no such file '" + src + "'");
}

Matrix load_matrix(const std::string& src) {
  const std::string text = read_source(src);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return json::parse_matrix(text);
  return parse_matrix(text);
}

TropElem det(const Matrix& a) { return a.size() <= kEnumerationBound ? per(a) : per_assignment(a); }

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string perm_text(const Permutation& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p(i) + 1);
  return s + "]";
}

std::string perm_text(const std::optional<Permutation>& p) { return p ? perm_text(*p) : "none"; }

struct Output {
  bool as_json = false;

  void print(const ordered_json& j) const { std::cout << j.dump(2) << '\n'; }

  void matrix(const Matrix& m) const {
    if (as_json) print(json::matrix(m));
    else std::cout << m;
  }

  void section(const std::string& name, const Matrix& m) const { std::cout << name << ":\n" << m; }
  void section(const std::string& name, const ElemWord& w) const {
    std::cout << name << ":\n" << format_word(w);
  }
};

void print_class_report(const ClassReport& r) {
  std::cout << "singularity: " << to_string(r.singularity) << '\n'
            << "bid: " << r.bid.pair() << '\n'
            << "per: " << r.bid.per << '\n'
            << "definite: " << yes_no(r.shape.definite) << '\n'
            << "normal: " << yes_no(r.shape.normal) << '\n'
            << "strictly_normal: " << yes_no(r.shape.strictly_normal) << '\n'
            << "SL: " << yes_no(r.groups.in_SL) << '\n'
            << "BQSL: " << yes_no(r.groups.in_BQSL) << '\n'
            << "QSL_circ: " << yes_no(r.groups.in_QSL_circ) << '\n'
            << "SL1: " << yes_no(r.in_SL1) << '\n'
            << "dominant:";
  for (const auto& p : r.dominance.dominant) std::cout << ' ' << perm_text(p);
  std::cout << '\n'
            << "strictly_dominant: " << perm_text(r.dominance.strictly_dominant) << '\n'
            << "uniformly_dominant: " << perm_text(r.dominance.uniformly_dominant) << '\n';
}

int run_check(const Output& out, const std::vector<std::string>& ids, bool all, std::size_t trials,
              std::uint64_t seed, bool conjecture, std::size_t n) {
  std::vector<std::string> run = ids;
  if (all)
    for (const auto& p : oracle::registry()) run.push_back(p.id);
  if (run.empty() && !conjecture) throw DomainError("check: give --property, --all or --conjecture");
  for (const auto& id : run) oracle::find_property(id);

  bool ok = true;
  ordered_json reports = ordered_json::array();
  for (const auto& id : run) {
    const auto r = oracle::property_run(id, trials, seed);
    ok = ok && r.passed();
    if (out.as_json) {
      reports.push_back(json::property_report(r));
      continue;
    }
    std::cout << r.id << ": " << r.status() << " (trials " << r.trials << ", skipped " << r.skipped << ", failures "
              << r.failures.size() << ")\n";
    for (std::size_t k = 0; k < r.failures.size() && k < 5; ++k)
      std::cout << "  trial " << r.failures[k].trial << " seed " << r.failures[k].seed << ": "
                << r.failures[k].detail << '\n';
  }
  ordered_json conj;
  if (conjecture) {
    const auto c = oracle::conjecture_search(trials, seed, n);
    if (out.as_json) {
      ordered_json cands = ordered_json::array();
      for (const auto& x : c.candidates)
        cands.push_back({{"trial", x.trial}, {"seed", x.seed}, {"B", json::matrix(x.b)},
                         {"B_nabla2", json::matrix(x.b_nabla2)}});
      conj = {{"trials", c.trials}, {"sampled", c.sampled}, {"confirmed", c.confirmed}, {"candidates", cands}};
    } else {
      std::cout << "conjecture search (n = " << n << "): trials " << c.trials << ", sampled " << c.sampled
                << ", confirmed " << c.confirmed << ", unresolved candidates " << c.candidates.size() << '\n';
      for (std::size_t k = 0; k < c.candidates.size() && k < 3; ++k)
        std::cout << "candidate (trial " << c.candidates[k].trial << "):\n" << c.candidates[k].b;
    }
  }
  if (out.as_json) {
    ordered_json j{{"properties", reports}, {"status", ok ? "pass" : "fail"}};
    if (conjecture) j["conjecture"] = conj;
    out.print(j);
  }
  return ok ? 0 : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"suptrop: exact supertropical matrix algebra"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Output out;
  app.add_flag("--json", out.as_json, "emit JSON records instead of text");

  std::function<int()> action;
  std::string a_src, b_src, word_src;
  bool allow_ghost = false;
  std::size_t n = 3, trials = 1000;
  std::uint64_t seed = 0;
  std::vector<std::string> props;
  bool all = false, conjecture = false;
  std::string kind = "general";

  auto one_matrix = [&](const std::string& name, const std::string& desc) {
    auto* c = app.add_subcommand(name, desc);
    c->add_option("A", a_src, "matrix file, '-' for stdin, or inline rows separated by ';'")->default_val("-");
    return c;
  };
  auto two_matrices = [&](const std::string& name, const std::string& desc, const char* a_name = "A",
                          const char* b_name = "B") {
    auto* c = app.add_subcommand(name, desc);
    c->add_option(a_name, a_src, "first matrix")->required();
    c->add_option(b_name, b_src, "second matrix")->required();
    return c;
  };

  one_matrix("per", "tropical determinant per(A)")->callback([&] {
    action = [&] {
      const TropElem p = det(load_matrix(a_src));
      if (out.as_json) out.print({{"per", json::scalar(p)}});
      else std::cout << p << '\n';
      return 0;
    };
  });
  one_matrix("bid", "bideterminant (per+, per-)")->callback([&] {
    action = [&] {
      const BidResult b = bid(load_matrix(a_src));
      if (out.as_json) out.print(json::bid(b));
      else std::cout << "per_plus: " << b.per_plus << "\nper_minus: " << b.per_minus << "\nper: " << b.per << '\n';
      return 0;
    };
  });
  one_matrix("adj", "adjoint matrix")->callback([&] {
    action = [&] {
      out.matrix(adj(load_matrix(a_src)));
      return 0;
    };
  });
  auto* nabla_cmd = one_matrix("nabla", "quasi-inverse per(A)^{-1} adj(A)");
  nabla_cmd->add_flag("--allow-ghost", allow_ghost, "accept a ghost determinant");
  nabla_cmd->callback([&] {
    action = [&] {
      out.matrix(nabla(load_matrix(a_src), allow_ghost ? GhostDet::Allow : GhostDet::Reject));
      return 0;
    };
  });
  one_matrix("classify", "singularity, shape, group memberships and dominance")->callback([&] {
    action = [&] {
      const Matrix a = load_matrix(a_src);
      const ClassReport r = classify(a);
      const bool two_track = nonfact_pattern(a);
      if (out.as_json) {
        ordered_json j = json::class_report(r);
        j["nonfact_pattern"] = two_track;
        out.print(j);
      } else {
        print_class_report(r);
        std::cout << "nonfact_pattern: " << yes_no(two_track) << '\n';
      }
      return 0;
    };
  });
  one_matrix("quasi", "quasi-identities I^l, I^r, the core and reversibility")->callback([&] {
    action = [&] {
      const QuasiPack q = quasi_pack(load_matrix(a_src));
      if (out.as_json) {
        out.print({{"left", json::matrix(q.left)},
                   {"right", json::matrix(q.right)},
                   {"core", json::matrix(q.core)},
                   {"core_tilde", json::matrix(q.core_tilde)},
                   {"reversible", q.reversible}});
      } else {
        out.section("I^l", q.left);
        out.section("I^r", q.right);
        out.section("core", q.core);
        out.section("core_tilde", q.core_tilde);
        std::cout << "reversible: " << yes_no(q.reversible) << '\n';
      }
      return 0;
    };
  });
  two_matrices("member", "membership of B in BQSL and the semigroups S^l_A, S^r_A, S_A", "A,--unit",
               "B,--candidate")->callback([&] {
    action = [&] {
      const Matrix a = load_matrix(a_src), b = load_matrix(b_src);
      const SemigroupMembership s = semigroup_membership(a, b);
      if (out.as_json) {
        out.print({{"BQSL", s.in_BQSL}, {"S_left", s.in_S_left}, {"S_right", s.in_S_right}, {"S_A", s.in_S_A}});
      } else {
        std::cout << "BQSL: " << yes_no(s.in_BQSL) << "\nS_left: " << yes_no(s.in_S_left)
                  << "\nS_right: " << yes_no(s.in_S_right) << "\nS_A: " << yes_no(s.in_S_A) << '\n';
      }
      return 0;
    };
  });
  two_matrices("conj", "conjugate A^nabla B A")->callback([&] {
    action = [&] {
      const Matrix a = load_matrix(a_src), b = load_matrix(b_src);
      out.matrix(conjugate(a, b));
      return 0;
    };
  });
  one_matrix("sns", "Gaussian E making a non-invertible A in SL_n singular")->callback([&] {
    action = [&] {
      const Matrix a = load_matrix(a_src);
      const SnsWitness w = sns_witness(a);
      const TropElem p = per(elementary(a.size(), w.gen.i, w.gen.j, w.gen.a) * a);
      if (out.as_json) {
        out.print({{"gen", json::generator(w.gen)},
                   {"definite_gen", json::generator(w.definite_gen)},
                   {"perm", json::gen_perm(w.factored.perm)},
                   {"definite", json::matrix(w.factored.definite)},
                   {"per_EA", json::scalar(p)}});
      } else {
        std::cout << "gen: " << format_gen(w.gen) << "\ndefinite_gen: " << format_gen(w.definite_gen)
                  << "\nper(EA): " << p << '\n';
      }
      return 0;
    };
  });
  one_matrix("ed", "word E with E A = A^{nabla nabla}")->callback([&] {
    action = [&] {
      const EdFactorization e = ed_factor(load_matrix(a_src));
      if (out.as_json) {
        out.print({{"word", json::word(e.word)},
                   {"definite_word", json::word(e.definite_word)},
                   {"perm", json::gen_perm(e.factored.perm)},
                   {"definite", json::matrix(e.factored.definite)},
                   {"target", json::matrix(e.target)}});
      } else {
        out.section("word", e.word);
        out.section("target", e.target);
      }
      return 0;
    };
  });
  two_matrices("bridge", "E1 A E2 = E3 B E4")->callback([&] {
    action = [&] {
      const Bridge br = bridge(load_matrix(a_src), load_matrix(b_src));
      if (out.as_json) {
        auto opt_word = [](const std::optional<ElemWord>& w) { return w ? json::word(*w) : ordered_json(nullptr); };
        out.print({{"E1", json::word(br.e1)},
                   {"E2", json::matrix(br.e2)},
                   {"E3", json::matrix(br.e3)},
                   {"E4", json::word(br.e4)},
                   {"E2_word", opt_word(br.e2_word)},
                   {"E3_word", opt_word(br.e3_word)},
                   {"fully_elementary", br.fully_elementary()}});
      } else {
        out.section("E1", br.e1);
        out.section("E2", br.e2);
        out.section("E3", br.e3);
        out.section("E4", br.e4);
        std::cout << "fully_elementary: " << yes_no(br.fully_elementary()) << '\n';
      }
      return 0;
    };
  });
  auto* st = app.add_subcommand("steinberg", "rewrite a word of Gaussians into lower * upper form");
  st->add_option("wordfile", word_src, "word file ('-' for stdin)")->default_val("-");
  st->add_option("--n", n, "dimension")->required();
  st->callback([&] {
    action = [&] {
      const SteinbergResult r = steinberg_rewrite(parse_word(read_source(word_src)), n);
      if (out.as_json) {
        ordered_json j{{"status", r.form ? "rewritten" : "unrewritable"}, {"steps", r.steps}};
        if (r.form) {
          j["lower"] = json::word(r.form->lower);
          j["upper"] = json::word(r.form->upper);
        } else {
          j["reason"] = r.failure;
        }
        out.print(j);
      } else if (r.form) {
        std::cout << "status: rewritten\nsteps: " << r.steps << '\n';
        out.section("lower", r.form->lower);
        out.section("upper", r.form->upper);
      } else {
        std::cout << "status: unrewritable\nreason: " << r.failure << '\n';
      }
      return r.form ? 0 : kExitDomain;
    };
  });
  auto* chk = app.add_subcommand("check", "run registered properties");
  chk->add_option("--property", props, "property id (repeatable)");
  chk->add_flag("--all", all, "run every registered property");
  chk->add_flag("--conjecture", conjecture, "also run the T^l T^u conjecture search");
  chk->add_option("--trials", trials, "trials per property")->default_val(1000);
  chk->add_option("--seed", seed, "base seed")->default_val(0);
  chk->add_option("--n", n, "dimension for the conjecture search")->default_val(3);
  chk->add_flag_callback("--list", [] {
    for (const auto& p : oracle::registry()) std::cout << p.id << "  [" << p.module << "] " << p.description << '\n';
    std::exit(0);
  }, "list registered properties");
  chk->callback([&] { action = [&] { return run_check(out, props, all, trials, seed, conjecture, n); }; });
  auto* rnd = app.add_subcommand("random", "seeded random matrix of a given class");
  rnd->add_option("--kind", kind, "general | tangible | SL | definite | strictly_normal | SL1 | gen_perm")
      ->default_val("general");
  rnd->add_option("--n", n, "dimension")->default_val(3);
  rnd->add_option("--seed", seed, "seed")->default_val(0);
  rnd->callback([&] {
    action = [&] {
      out.matrix(oracle::random_special(seed, n, oracle::parse_kind(kind)));
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitDomain;
  }

  try {
    return action();
  } catch (const InternalError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kExitVerification;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}
