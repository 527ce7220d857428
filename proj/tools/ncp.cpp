#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ncp/json_io.hpp"

using namespace ncp;

namespace {

enum Exit { kOk = 0, kFactFailed = 1, kBadInput = 2, kExhausted = 3 };

struct Globals {
  std::string ext;
  std::int64_t bound = 0;
  std::uint64_t seed = kDefaultSeed;
  bool pretty = false;
};

Globals g;

AbExt load_ext() {
  require(!g.ext.empty(), "--ext FILE is required");
  return ext_from_json(read_json_file(g.ext));
}

std::int64_t bound_or(std::int64_t fallback) { return g.bound > 0 ? g.bound : fallback; }

void print_table(const json& j) {
  const json* rows = nullptr;
  for (const char* key : {"facts", "checks", "batteries"})
    if (j.contains(key) && j.at(key).is_array()) rows = &j.at(key);
  if (!rows) {
    std::cerr << j.dump(2) << "\n";
    return;
  }
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!it.value().is_array() && !it.value().is_object()) std::cerr << it.key() << ": " << it.value().dump() << "\n";
  for (const auto& r : *rows) {
    const bool pass = r.value("pass", false);
    std::cerr << (pass ? "  pass  " : "  FAIL  ") << std::left << std::setw(52) << r.value("name", std::string())
              << " " << (r.contains("detail") ? r.at("detail").get<std::string>()
                                              : "cases " + std::to_string(r.value("cases", 0)))
              << "\n";
  }
}

int emit(const json& j, bool ok = true) {
  std::cout << j.dump() << "\n";
  if (g.pretty) print_table(j);
  return ok ? kOk : kFactFailed;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      fail("cannot parse integer list '" + text + "'");
    }
  }
  return out;
}

GalElt parse_sigma(const AbExt& M, const std::string& text) {
  GalElt s;
  for (int v : parse_ints(text)) s.push_back(static_cast<int>(mod(v, M.n())));
  require(static_cast<int>(s.size()) == M.rank(), "sigma needs " + std::to_string(M.rank()) + " coordinates");
  return s;
}

BaseField parse_base(const std::string& base, std::int64_t q) {
  if (base == "Q") return BaseField::rationals();
  require(base == "Fq", "--base must be Q or Fq");
  return BaseField::function_field(q);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncp: local degrees, Brauer classes, covers and central extensions over Q and F_q(t)"};
  app.require_subcommand(1);
  app.add_option("--ext", g.ext, "extension JSON file");
  app.add_option("--bound", g.bound, "search bound (norm or radicand size)");
  app.add_option("--seed", g.seed, "64-bit seed for randomized runs");
  app.add_flag("--pretty", g.pretty, "human-readable table on stderr");

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> f) {
    sub->fallthrough();
    sub->callback([&action, f = std::move(f)] { action = f; });
  };

  // field / local-degree / isolated ---------------------------------------
  on(app.add_subcommand("field", "degree, ramification and roots of unity of an extension"),
     [] { return emit(field_summary_json(load_ext())); });

  std::string place_text;
  auto* ld = app.add_subcommand("local-degree", "decomposition and inertia data at places");
  ld->add_option("--place", place_text, "comma-separated places (default: ramified places)");
  on(ld, [&] {
    const AbExt M = load_ext();
    std::vector<Place> places = place_text.empty() ? ramified_places(M) : parse_places(place_text, M.base());
    json out = json::array();
    for (const auto& P : places) out.push_back(to_json(local_data(M, P)));
    return emit({{"extension", M.str()}, {"places", out}});
  });

  on(app.add_subcommand("isolated", "isolated places and gaps"), [] {
    const AbExt M = load_ext();
    json iso = json::array(), reps = json::array();
    for (const auto& [P, p] : isolated_places(M)) {
      const auto r = isolation_report(M, p);
      iso.push_back({{"place", to_json(P)}, {"p", p}, {"gap", r.gap}});
    }
    for (std::int64_t p : degree_primes(M))
      if (p != M.base().characteristic()) reps.push_back(to_json(isolation_report(M, p)));
    return emit({{"extension", M.str()}, {"isolated", iso}, {"reports", reps}});
  });

  // brauer -----------------------------------------------------------------
  auto* br = app.add_subcommand("brauer", "Brauer classes given by Hasse invariants");
  br->fallthrough();
  br->require_subcommand(1);
  std::string class_file, base = "Q", S_text;
  std::int64_t base_q = 0, m = 0, chi = 0, p = 0;

  auto load_class = [&](const BaseField& K) {
    require(!class_file.empty(), "--class FILE is required");
    return class_from_json(read_json_file(class_file), K);
  };

  auto* bi = br->add_subcommand("index", "global and local indices");
  bi->add_option("--class", class_file)->required();
  bi->add_option("--base", base, "Q or Fq (ignored with --ext)");
  bi->add_option("--q", base_q);
  on(bi, [&] {
    const BaseField K = g.ext.empty() ? parse_base(base, base_q) : load_ext().base();
    const BrauerClass a = load_class(K);
    json local = json::array();
    for (const auto& [P, x] : a.invariants()) local.push_back({{"place", to_json(P)}, {"index", to_int64(x.order())}});
    return emit({{"class", to_json(a)}, {"index", index(a)}, {"local", local}});
  });

  auto* bres = br->add_subcommand("restrict", "restriction to M = --ext");
  bres->add_option("--class", class_file)->required();
  bres->add_option("--chi-order", chi, "order of the character (default: exponent of Gal(M/K))");
  on(bres, [&] {
    const AbExt M = load_ext();
    const BrauerClass a = load_class(M.base());
    json local = json::array();
    for (const auto& [P, x] : a.invariants())
      local.push_back({{"place", to_json(P)}, {"restricted_local_index", restricted_local_index(a, M, P)}});
    const std::int64_t c = chi > 0 ? chi : M.exponent();
    return emit({{"class", to_json(a)},
                 {"restricted_index", restricted_index(a, M)},
                 {"local", local},
                 {"chi_order", c},
                 {"fiber_index", fiber_index(a, M, c)}});
  });

  auto* bs = br->add_subcommand("split", "does the extension --ext split the class");
  bs->add_option("--class", class_file)->required();
  on(bs, [&] {
    const AbExt L = load_ext();
    const BrauerClass a = load_class(L.base());
    std::vector<Place> support;
    for (const auto& [P, x] : a.invariants()) support.push_back(P);
    const bool s = splits_over_K(local_degrees_of(L, support), a);
    return emit({{"class", to_json(a)}, {"extension", L.str()}, {"splits", s}});
  });

  auto* bc = br->add_subcommand("construct", "a class with restricted index m and prescribed local indices on S");
  bc->add_option("--m", m)->required();
  bc->add_option("--S", S_text, "comma-separated places");
  on(bc, [&] {
    const AbExt M = load_ext();
    const auto S = parse_places(S_text, M.base());
    const BrauerClass a = construct_class(M, m, S, bound_or(1'000'000));
    const DivisorProfile d(M, m);
    json local = json::array();
    for (const auto& P : S)
      local.push_back({{"place", to_json(P)}, {"d", d(P)}, {"restricted_local_index", restricted_local_index(a, M, P)}});
    return emit({{"class", to_json(a)},
                 {"index", index(a)},
                 {"restricted_index", restricted_index(a, M)},
                 {"fiber_index", fiber_index(a, M, M.exponent())},
                 {"S", local}});
  });

  auto* bl = br->add_subcommand("isolation-inequality", "local index bound at the p-isolated place");
  bl->add_option("--class", class_file)->required();
  bl->add_option("--p", p)->required();
  on(bl, [&] {
    const AbExt M = load_ext();
    const BrauerClass a = load_class(M.base());
    const auto r = isolation_inequality(a, M, p);
    return emit(to_json(r), r.holds);
  });

  // cover ------------------------------------------------------------------
  auto* cv = app.add_subcommand("cover", "cover certificates");
  cv->fallthrough();
  cv->require_subcommand(1);
  int n_exp = 0, n_prime = 0, max_extra = 1;
  std::string extra_json;

  auto* cscan = cv->add_subcommand("scan", "search abelian m-covers with d_P(m) | [L:M]_P on S");
  cscan->add_option("--m", m)->required();
  cscan->add_option("--S", S_text);
  cscan->add_option("--n-prime", n_prime, "Kummer exponent of the covers (default: n of M)");
  cscan->add_option("--max-extra", max_extra, "number of extra radicands");
  on(cscan, [&] {
    const AbExt M = load_ext();
    const auto S = parse_places(S_text, M.base());
    const CertReport r = check_Bm(M, m, S, CoverFamily{bound_or(1000), n_prime, max_extra, 2'000'000});
    return emit(to_json(r), r.pass());
  });

  auto* ccheck = cv->add_subcommand("check", "check a given p^n-cover M(extra radicands)");
  ccheck->add_option("--extra", extra_json, "JSON array of radicands")->required();
  ccheck->add_option("--p", p)->required();
  ccheck->add_option("--n", n_exp)->required();
  ccheck->add_option("--n-prime", n_prime);
  ccheck->add_option("--S", S_text);
  on(ccheck, [&] {
    const AbExt M = load_ext();
    json arr;
    try {
      arr = json::parse(extra_json);
    } catch (const json::exception& e) {
      fail(std::string("--extra: ") + e.what());
    }
    require(arr.is_array(), "--extra must be a JSON array");
    std::vector<Element> extra;
    for (const auto& r : arr) extra.push_back(element_from_json(r, M.base()));
    const Cover C = build_cover(M, extra, n_prime > 0 ? n_prime : M.n());
    const auto S = parse_places(S_text, M.base());
    const CertReport r = check_rank_two_cover(M, p, n_exp, S, C);
    json j = to_json(r);
    json inertia = json::array();
    for (const auto& P : S)
      if (!P.is_real()) inertia.push_back(to_json(inertia_bound_check(C, P, p)));
    j["inertia"] = inertia;
    return emit(j, r.pass());
  });

  // bound-report -----------------------------------------------------------
  bool obstruction = false;
  auto* brp = app.add_subcommand("bound-report", "what is known about b_p for M = K(chi)");
  brp->add_option("--p", p)->required();
  brp->add_option("--chi-order", chi)->required();
  brp->add_flag("--obstruction", obstruction, "a certified obstruction to covers of degree p is known");
  on(brp, [&] { return emit(to_json(bound_report(load_ext(), p, chi, obstruction))); });

  // search -----------------------------------------------------------------
  auto* se = app.add_subcommand("search", "prime searches");
  se->fallthrough();
  se->require_subcommand(1);
  std::string sigma_text;
  std::size_t count = 5;

  auto places_json = [](const std::vector<Place>& ps) {
    json out = json::array();
    for (const auto& P : ps) out.push_back(to_json(P));
    return out;
  };

  auto* sf = se->add_subcommand("frobenius", "unramified places with Frobenius sigma");
  sf->add_option("--sigma", sigma_text)->required();
  sf->add_option("--count", count);
  on(sf, [&] {
    const AbExt M = load_ext();
    const auto hits = find_primes_with_frobenius(M, parse_sigma(M, sigma_text), count, bound_or(100'000));
    if (hits.size() < count) throw SearchExhausted("found " + std::to_string(hits.size()) + " of " + std::to_string(count));
    return emit({{"sigma", parse_sigma(M, sigma_text)}, {"places", places_json(hits)}});
  });

  auto* sq = se->add_subcommand("qsigma", "places of Q_sigma");
  sq->add_option("--sigma", sigma_text)->required();
  sq->add_option("--p", p)->required();
  sq->add_option("--count", count);
  on(sq, [&] {
    const AbExt M = load_ext();
    const auto hits = qsigma_search(M, parse_sigma(M, sigma_text), p, count, bound_or(100'000));
    if (hits.size() < count) throw SearchExhausted("found " + std::to_string(hits.size()) + " of " + std::to_string(count));
    return emit({{"sigma", parse_sigma(M, sigma_text)}, {"modulus", qsigma_modulus(M, p)}, {"places", places_json(hits)}});
  });

  auto* s0 = se->add_subcommand("s0", "one place per generator of Gal(M/T) with N = 1 mod p^n");
  s0->add_option("--p", p)->required();
  s0->add_option("--n", n_exp)->required();
  on(s0, [&] {
    const AbExt M = load_ext();
    json out = json::array();
    for (const auto& [sigma, P] : s0_search(M, p, n_exp, bound_or(100'000)))
      out.push_back({{"sigma", sigma}, {"place", to_json(P)}});
    return emit({{"S0", out}});
  });

  // groupext ---------------------------------------------------------------
  auto* ge = app.add_subcommand("groupext", "central extensions with cyclic kernel");
  ge->fallthrough();
  ge->require_subcommand(1);
  int max_a = 3;
  std::string max_b_text = "4,4,4";

  auto* gs = ge->add_subcommand("scan", "extensions with non-cyclic B and all fibers cyclic");
  gs->add_option("--p", p)->required();
  gs->add_option("--max-a", max_a, "largest exponent of |A|");
  gs->add_option("--max-b", max_b_text, "largest factor order per rank, e.g. 4,4,4");
  on(gs, [&] {
    const auto orders = parse_ints(max_b_text);
    require(!orders.empty(), "--max-b is empty");
    int max_b = 0;
    for (int o : orders) {
      int e = 0;
      std::int64_t v = o;
      while (v > 1 && v % p == 0) {
        v /= p;
        ++e;
      }
      require(v == 1 && e >= 1, "--max-b entries must be powers of p greater than 1");
      max_b = std::max(max_b, e);
    }
    const ScanResult r = cyclic_fiber_scan(p, max_a, max_b, static_cast<int>(orders.size()));
    return emit(to_json(r), r.counterexamples == 0);
  });

  auto* gv = ge->add_subcommand("verify", "pairing laws, power-map criteria and fibers of --ext");
  on(gv, [&] {
    require(!g.ext.empty(), "--ext FILE is required");
    const CentralExt E = groupext_from_json(read_json_file(g.ext));
    const auto laws = verify_beta_laws(E);
    const auto pm = verify_power_map_criteria(E);
    json fibers = json::array();
    bool all_cyclic = true, criterion = true;
    for (const auto& x : E.B().elements()) {
      const bool c = fiber_is_cyclic(E, x);
      all_cyclic = all_cyclic && c;
      fibers.push_back({{"x", x}, {"cyclic", c}});
      if (!E.B().is_zero(x)) criterion = criterion && verify_fiber_generator_criterion(E, x);
    }
    return emit({{"extension", to_json(E)},
                 {"order", E.order()},
                 {"pairing", to_json(laws)},
                 {"power_map", to_json(pm)},
                 {"fiber_generator_criterion", criterion},
                 {"all_fibers_cyclic", all_cyclic},
                 {"fibers", fibers}},
                laws.ok() && pm.ok() && criterion);
  });

  // worked examples ---------------------------------------------------------
  auto* pe = app.add_subcommand("example", "worked examples");
  pe->fallthrough();
  pe->require_subcommand(1);
  std::int64_t l = 0, q = 0, a = 0;
  std::string place_arg;

  auto* pm = pe->add_subcommand("multiquadratic", "M = Q(sqrt q, sqrt -l): no 2-cover with [L:M]_l = 2");
  pm->add_option("--l", l)->required();
  pm->add_option("--q", q)->required();
  on(pm, [&] {
    const ExampleReport r = multiquadratic_example(l, q, bound_or(1000));
    return emit(to_json(r), r.verdict());
  });

  auto* pf = pe->add_subcommand("function-field", "the bicyclic Kummer extension of F_q(t) with b_p = 0");
  pf->add_option("--p", p)->required();
  pf->add_option("--q", q)->required();
  pf->add_option("--a", a)->required();
  on(pf, [&] {
    const ExampleReport r = function_field_example(p, q, a);
    return emit(to_json(r), r.verdict());
  });

  auto* pb = pe->add_subcommand("bicyclic", "bicyclic extension with prescribed splitting at a place");
  pb->add_option("--p", p)->required();
  pb->add_option("--base", base, "Q or Fq");
  pb->add_option("--q", base_q);
  pb->add_option("--place", place_arg)->required();
  on(pb, [&] {
    const BaseField K = parse_base(base, base_q);
    const ExampleReport r = bicyclic_realization(K, p, parse_place(place_arg, K), 100'000, bound_or(200));
    return emit(to_json(r), r.verdict());
  });

  // suite ------------------------------------------------------------------
  std::string mutation = "none";
  bool quick = false;
  auto* su = app.add_subcommand("suite", "seeded property batteries");
  su->add_option("--mutation", mutation, "none, d-without-gap or beta-cocycle")
      ->check(CLI::IsMember({"none", "d-without-gap", "beta-cocycle"}));
  su->add_flag("--quick", quick, "smaller sizes, no exhaustive scan or sweep");
  on(su, [&] {
    const SuiteSizes sizes = quick ? SuiteSizes::quick() : SuiteSizes{};
    SuiteHooks hooks;
    if (mutation == "d-without-gap") hooks.d_value = mutants::d_value_without_gap;
    if (mutation == "beta-cocycle") hooks.beta = mutants::beta_as_cocycle;
    const SuiteSummary s = run_property_suite(g.seed, sizes, hooks);
    json j = to_json(s);
    j["mutation"] = mutation;
    return emit(j, s.pass());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }
  try {
    return action ? action() : kBadInput;
  } catch (const SearchExhausted& e) {
    std::cerr << "search exhausted: " << e.what() << "\n";
    return kExhausted;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFactFailed;
  }
}
