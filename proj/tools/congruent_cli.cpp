#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "config.hpp"
#include "congruent/audit.hpp"
#include "congruent/diophantine.hpp"
#include "congruent/factor.hpp"
#include "congruent/generators.hpp"
#include "congruent/oracle.hpp"
#include "congruent/records.hpp"
#include "congruent/triples.hpp"

using namespace congruent;
using congruent::cli::Format;

namespace {

const char* kConfigHelp = R"(Config file (--config PATH, or CONGRUENT_CONFIG):
  flat "key = value" lines, '#' starts a comment
    format = json|csv
    out = PATH
    jobs = N
    <claim id>.<bound> = N      e.g. thm-4.1.max_ab = 50
  command-line flags override the file.)";

// Thrown for bad command-line input that CLI11 cannot see (e.g. "a=b" syntax).
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  unsigned jobs = 0;
  std::optional<std::string> config;
  std::optional<std::string> format;
  std::optional<std::string> out;
  cli::RunConfig cfg;

  Format format_or_default() const { return format ? cli::parse_format(*format) : cfg.output_format; }
  unsigned workers() const {
    if (jobs > 0) return jobs;
    if (cfg.jobs) return *cfg.jobs;
    return std::max(1u, std::thread::hardware_concurrency());
  }
};

void emit(const Globals& g, const std::string& text) {
  std::optional<std::filesystem::path> path;
  if (g.out) path = *g.out;
  else if (g.cfg.output_path) path = g.cfg.output_path;
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path->string());
  f << text;
}

void emit_json(const Globals& g, const json& j) { emit(g, j.dump(2) + "\n"); }

std::string csv_lines(const std::string& header, const std::vector<std::string>& rows) {
  std::string out = header + "\n";
  for (const auto& r : rows) out += r + "\n";
  return out;
}

std::string sides_csv(const RationalTriangle& t) {
  const auto s = t.sorted_sides();
  return csv_join({s[0].str(), s[1].str(), s[2].str()});
}

std::pair<std::string, std::uint64_t> parse_bound(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("--bound expects name=value, got '" + text + "'");
  const std::string value = text.substr(eq + 1);
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    if (!value.empty() && value[0] != '-') v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (value.empty() || used != value.size() || v == 0) {
    throw UsageError("bound " + text.substr(0, eq) + " must be a positive integer, got '" + value + "'");
  }
  return {text.substr(0, eq), v};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact congruent-number toolkit: Pythagorean triples, rational triangles, bounded searches and "
               "claim audits. All numbers are printed in exact decimal."};
  app.footer(kConfigHelp);
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--jobs", g.jobs, "worker threads (default: all cores)")->check(CLI::PositiveNumber);
  app.add_option("--config", g.config, "config file (overrides CONGRUENT_CONFIG)");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "write output to this file instead of stdout");

  std::string max_c;
  auto* triples = app.add_subcommand("triples", "primitive Pythagorean triples with c <= MAX_C, by (m, n)");
  triples->add_option("--max-c", max_c, "hypotenuse bound")->required();

  std::string sp_n;
  auto* squarepart = app.add_subcommand("squarepart", "largest d with d^2 | N");
  squarepart->add_option("N", sp_n, "positive integer")->required();

  std::vector<std::string> sides;
  auto* classify_cmd = app.add_subcommand("classify", "check a rational right triangle, give its area and class");
  classify_cmd->add_option("sides", sides, "LEG1 LEG2 HYP as a/b or integers")->required()->expected(3);

  std::string gm, gn;
  bool distinct = false;
  auto* generate = app.add_subcommand("generate", "congruent witnesses from one Euclid seed (m, n)");
  generate->add_option("--m", gm, "seed m")->required();
  generate->add_option("--n", gn, "seed n")->required();
  generate->add_flag("--distinct", distinct, "list distinct values only");

  std::string target;
  std::uint64_t cert_max_m = 0;
  auto* certify_cmd = app.add_subcommand("certify", "search seeds m <= MAX_M for a triangle of area N");
  certify_cmd->add_option("N", target, "positive integer")->required();
  certify_cmd->add_option("--max-m", cert_max_m, "seed bound")->required();

  std::string qa, qb;
  std::uint64_t q_max_xy = 0;
  auto* quartic = app.add_subcommand("search-quartic", "solutions of a x^4 + b y^4 = z^2 with x, y <= MAX_XY");
  quartic->add_option("--a", qa, "coefficient a")->required();
  quartic->add_option("--b", qb, "coefficient b")->required();
  quartic->add_option("--max-xy", q_max_xy, "bound on x and y")->required();

  std::string pell_p;
  auto* pell = app.add_subcommand("pell", "smallest k^2 - 64 p^2 = l^2 with l > 1 for a prime p");
  pell->add_option("--p", pell_p, "prime")->required();

  std::uint64_t uf_max = 0;
  auto* unit = app.add_subcommand("unit-fractions", "primitive 1/a + 1/b = 1/c with a, b, c <= MAX, checking a + b");
  unit->add_option("--max", uf_max, "bound on a, b, c")->required();

  std::vector<std::string> claim_args, bound_args;
  bool all = false, timing = false, list = false;
  std::map<std::string, std::uint64_t> shorthand;
  auto* audit = app.add_subcommand("audit", "run claim audits and emit JSON reports");
  audit->add_option("--claim", claim_args, "claim id (repeatable); see --list");
  audit->add_flag("--all", all, "run the whole registry");
  audit->add_flag("--list", list, "list claim ids, default bounds and out-of-scope entries");
  audit->add_option("--bound", bound_args,
                    "name=value for --claim; claim.name=value with --all (repeatable)");
  audit->add_flag("--timing", timing, "add elapsed_ms to each report");
  for (const char* name : {"max_c", "max_m", "max_n", "max_p", "max_i", "max_a", "max_ab", "max_abc", "max_xy",
                           "max_power"}) {
    std::string flag = std::string("--") + name;
    std::replace(flag.begin(), flag.end(), '_', '-');
    audit->add_option_function<std::uint64_t>(
             flag, [&shorthand, name](const std::uint64_t& v) { shorthand[name] = v; },
             std::string("same as --bound ") + name + "=N")
        ->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (auto path = cli::config_path(g.config)) g.cfg = cli::load_config(*path);
    const Format fmt = g.format_or_default();

    if (*triples) {
      const auto list_triples = enumerate_triples(parse_bigint(max_c));
      if (fmt == Format::Csv) {
        std::vector<std::string> rows;
        for (const auto& t : list_triples) rows.push_back(to_csv(t));
        emit(g, csv_lines(triple_csv_header(), rows));
      } else {
        json j = json::array();
        for (const auto& t : list_triples) j.push_back(to_json(t));
        emit_json(g, j);
      }
    } else if (*squarepart) {
      const BigInt n = parse_bigint(sp_n);
      const BigInt d = square_part(n);
      if (fmt == Format::Csv) emit(g, csv_lines("n,square_part", {csv_join({n.get_str(), d.get_str()})}));
      else emit(g, d.get_str() + "\n");
    } else if (*classify_cmd) {
      const RationalTriangle t =
          make_triangle(Rational::parse(sides[0]), Rational::parse(sides[1]), Rational::parse(sides[2]));
      const std::string klass(to_string(classify(t)));
      if (fmt == Format::Csv) {
        emit(g, csv_lines("leg1,leg2,hyp,area,class", {csv_join({sides_csv(t), area(t).str(), klass})}));
      } else {
        emit_json(g, {{"triangle", to_json(t)}, {"area", area(t).str()}, {"class", klass}});
      }
    } else if (*generate) {
      const BigInt m = parse_bigint(gm), n = parse_bigint(gn);
      if (distinct) {
        const auto values = distinct_values_from_seed(m, n);
        if (fmt == Format::Csv) {
          std::vector<std::string> rows;
          for (const auto& v : values) rows.push_back(v.get_str());
          emit(g, csv_lines("value", rows));
        } else {
          json j = json::array();
          for (const auto& v : values) j.push_back(to_json(v));
          emit_json(g, j);
        }
      } else {
        const auto ws = candidates_from_seed(m, n);
        if (fmt == Format::Csv) {
          std::vector<std::string> rows;
          for (const auto& w : ws) rows.push_back(to_csv(w));
          emit(g, csv_lines(witness_csv_header(), rows));
        } else {
          json j = json::array();
          for (const auto& w : ws) j.push_back(to_json(w));
          emit_json(g, j);
        }
      }
    } else if (*certify_cmd) {
      const CertifyResult r = certify(parse_bigint(target), cert_max_m, g.workers());
      if (fmt == Format::Csv) {
        std::string row;
        if (const auto* c = std::get_if<Certificate>(&r)) {
          row = csv_join({c->value.get_str(), c->seed_m.get_str(), c->seed_n.get_str(), c->scale_k.get_str(),
                          sides_csv(c->triangle), "certified"});
        } else {
          row = csv_join({target, "", "", "", "", "", "", "unknown_up_to_bound"});
        }
        emit(g, csv_lines("value,m,n,k,leg1,leg2,hyp,status", {row}));
      } else {
        emit_json(g, to_json(r));
      }
    } else if (*quartic) {
      const auto sols = search_quartic(parse_bigint(qa), parse_bigint(qb), q_max_xy);
      if (fmt == Format::Csv) {
        std::vector<std::string> rows;
        for (const auto& s : sols) {
          rows.push_back(csv_join({s.a.get_str(), s.b.get_str(), s.x.get_str(), s.y.get_str(), s.z.get_str()}));
        }
        emit(g, csv_lines("a,b,x,y,z", rows));
      } else {
        json j = json::array();
        for (const auto& s : sols) j.push_back(to_json(s));
        emit_json(g, j);
      }
    } else if (*pell) {
      const BigInt p = parse_bigint(pell_p);
      if (!is_prime(p)) throw ParameterError("pell: " + pell_p + " is not prime");
      const auto sol = pell_like_search(p);
      if (fmt == Format::Csv) {
        emit(g, csv_lines("p,k,l", {sol ? csv_join({p.get_str(), sol->k.get_str(), sol->l.get_str()})
                                        : csv_join({p.get_str(), "", ""})}));
      } else {
        emit_json(g, {{"p", to_json(p)}, {"solution", sol ? to_json(*sol) : json(nullptr)}});
      }
    } else if (*unit) {
      const UnitFractionReport r = unit_fraction_audit(uf_max, g.workers());
      if (fmt == Format::Csv) {
        std::vector<std::string> rows;
        for (const auto& v : r.violations) {
          rows.push_back(csv_join({std::to_string(v.a), std::to_string(v.b), std::to_string(v.c)}));
        }
        emit(g, csv_lines("a,b,c", rows));
      } else {
        json violations = json::array();
        for (const auto& v : r.violations) violations.push_back(to_json(v));
        emit_json(g, {{"max_abc", std::to_string(r.max_abc)},
                      {"pairs_scanned", std::to_string(r.pairs_scanned)},
                      {"instances", std::to_string(r.instances)},
                      {"violations", violations}});
      }
    } else if (*audit) {
      if (list) {
        json claims = json::array();
        for (const auto& e : claim_registry()) {
          json bounds = json::object();
          for (const auto& [k, v] : e.default_bounds) bounds[k] = v;
          claims.push_back({{"claim_id", e.id}, {"paper_location", e.paper_location}, {"bounds", bounds}});
        }
        json oos = json::array();
        for (const auto& e : out_of_scope_entries()) {
          oos.push_back({{"paper_location", e.paper_location}, {"reason", e.reason}});
        }
        emit_json(g, {{"claims", claims}, {"out_of_scope", oos}});
        return 0;
      }
      if (all == !claim_args.empty()) throw UsageError("audit needs exactly one of --claim or --all");

      std::map<std::string, Bounds> overrides = g.cfg.default_bounds;
      std::vector<ClaimReport> reports;
      if (all) {
        if (!shorthand.empty()) throw UsageError("--max-* shorthands need --claim; use --bound id.name=value");
        for (const auto& b : bound_args) {
          const auto [key, v] = parse_bound(b);
          const auto dot = key.rfind('.');
          if (dot == std::string::npos) throw UsageError("with --all, --bound expects claim.name=value");
          overrides[cli::resolve_claim_id(key.substr(0, dot))][key.substr(dot + 1)] = v;
        }
        reports = run_all(overrides, g.workers(), timing);
      } else {
        for (const auto& raw : claim_args) {
          const std::string id = cli::resolve_claim_id(raw);
          Bounds b = overrides.count(id) ? overrides[id] : Bounds{};
          for (const auto& arg : bound_args) {
            const auto [k, v] = parse_bound(arg);
            b[k] = v;
          }
          for (const auto& [k, v] : shorthand) b[k] = v;
          reports.push_back(run_claim(id, b, g.workers(), timing));
        }
      }

      if (fmt == Format::Csv) {
        std::vector<std::string> rows;
        for (const auto& r : reports) {
          rows.push_back(csv_join({r.claim_id, std::string(to_string(r.status)), std::to_string(r.checked_count),
                                   std::to_string(r.witnesses.size())}));
        }
        emit(g, csv_lines("claim_id,status,checked_count,witnesses", rows));
      } else if (reports.size() == 1 && !all) {
        emit_json(g, to_json(reports.front()));
      } else {
        json arr = json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        emit_json(g, arr);
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ContractError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {  // ParameterError, ValidationError, ConfigError
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {  // RegistryError
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
