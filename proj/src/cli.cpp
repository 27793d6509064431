#include "hmaps/cli.hpp"

#include "hmaps/asym.hpp"
#include "hmaps/delsarte.hpp"
#include "hmaps/graphs.hpp"
#include "hmaps/io.hpp"
#include "hmaps/maps.hpp"
#include "hmaps/product_lp.hpp"
#include "hmaps/projective.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <ostream>

namespace hmaps::cli {

namespace {

using io::Json;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// a = alpha * total, which must be an integer.
int scaled_distance(const std::string& frac, int total, const char* what) {
  const Rat r = parse_rat(frac) * total;
  if (r.get_den() != 1)
    throw DomainError(std::string(what) + " * length = " + to_string(r) + " is not an integer");
  return static_cast<int>(r.get_num().get_si());
}

struct DistanceArg {
  int value = -1;
  std::string frac;
  // --a 3 or --alpha 3/4
  int resolve(int total, const char* name) const {
    if (!frac.empty()) return scaled_distance(frac, total, name);
    if (value < 0) throw DomainError(std::string("missing ") + name);
    return value;
  }
};

void add_distance(CLI::App* app, DistanceArg& arg, const std::string& letter, const std::string& greek) {
  auto* i = app->add_option("--" + letter, arg.value, "integer distance");
  auto* f = app->add_option("--" + greek, arg.frac, "fraction of the length, e.g. 3/4");
  i->excludes(f);
}

ProductKind parse_kind(const std::string& s) {
  if (s == "homomorphic" || s == "ltimes") return ProductKind::Homomorphic;
  if (s == "strong" || s == "boxtimes") return ProductKind::Strong;
  throw DomainError("unknown product kind '" + s + "'");
}

std::string kind_name(ProductKind k) { return k == ProductKind::Homomorphic ? "homomorphic" : "strong"; }

std::string bits(Word w, int len) { return BitString{w, len}.str(); }

Json bit_rows(const std::vector<Word>& rows, int len) {
  Json a = Json::array();
  for (Word r : rows) a.push_back(bits(r, len));
  return a;
}

Word parse_bits_or_hex(const std::string& s, int len) {
  if (len > 0 && static_cast<int>(s.size()) == len &&
      std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; }))
    return BitString::parse(s).bits;
  return io::parse_hex(s);
}

struct Emitter {
  std::ostream& out;
  bool meta = false;

  void json(Json j) const {
    if (meta) {
      Json wrapped;
      wrapped["meta"] = {{"tool", "hmaps"}, {"version", kVersion}};
      for (auto& [k, v] : j.items()) wrapped[k] = v;
      j = std::move(wrapped);
    }
    out << j.dump(2) << '\n';
  }
};

Json theta_json(const HammingGraphSpec& g, bool certs) {
  const ThetaResult r = theta_s(g);
  Json j;
  j["graph"] = g.name();
  j["value"] = to_string(r.value);
  j["decimal"] = r.value.get_d();
  if (certs) {
    j["certificates"] = {
        {"primal_spectrum", io::to_json(r.primal.coeffs)},
        {"primal_values", io::to_json(r.primal.values())},
        {"dual_spectrum", io::to_json(r.dual.coeffs)},
        {"dual_values", io::to_json(r.dual.values())},
    };
  }
  return j;
}

MapTable load_map(const std::string& path) { return io::map_from_json(io::read_json_file(path)); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact theta bounds, (alpha,beta)-maps and Hamming graph tools", "hmaps"};
  app.require_subcommand(1);
  app.fallthrough();
  bool meta = false;
  app.add_flag("--meta", meta, "prefix output with a version header");
  app.set_version_flag("--version", kVersion);

  std::function<int()> action;
  Emitter emit{out};

  // theta
  int n = 0, d = 0, k = 0, m = 0;
  bool complement = false, certs = false;
  auto* theta = app.add_subcommand("theta", "theta_S of H(n,d) by the exact LP");
  theta->add_option("--n", n)->required();
  theta->add_option("--d", d)->required();
  theta->add_flag("--complement", complement, "use Hbar(n,d)");
  theta->add_flag("--certificates", certs, "dump primal and dual certificates");
  theta->callback([&] {
    action = [&] {
      emit.json(theta_json(HammingGraphSpec{n, d, complement}, certs));
      return kOk;
    };
  });

  // theta-product
  DistanceArg pa, pb;
  std::string kind = "homomorphic";
  auto* tprod = app.add_subcommand("theta-product", "theta_S of Hbar(k,a) ltimes Hbar(n,b) or Hbar(k,a) boxtimes H(n,b)");
  tprod->add_option("--k", k)->required();
  tprod->add_option("--n", n)->required();
  add_distance(tprod, pa, "a", "alpha");
  add_distance(tprod, pb, "b", "beta");
  tprod->add_option("--kind", kind, "homomorphic | strong");
  tprod->add_flag("--certificates", certs);
  tprod->callback([&] {
    action = [&] {
      const int a = pa.resolve(k, "alpha"), b = pb.resolve(n, "beta");
      const auto r = theta_s_product(k, a, n, b, parse_kind(kind));
      Json j;
      j["graph"] = r.sets.graph().name();
      j["kind"] = kind_name(r.sets.kind);
      j["value"] = to_string(r.value);
      j["decimal"] = r.value.get_d();
      if (certs) {
        j["certificates"] = {{"primal_spectrum", io::to_json(r.primal.coeffs)},
                             {"primal_values", io::to_json(r.primal.values())},
                             {"dual_spectrum", io::to_json(r.dual.coeffs)},
                             {"dual_values", io::to_json(r.dual.values())}};
      }
      emit.json(j);
      return kOk;
    };
  });

  // alpha
  std::uint64_t budget = Budget{}.max_nodes;
  DistanceArg aa, ab;
  auto* alpha = app.add_subcommand("alpha", "independence number by branch and bound");
  alpha->add_option("--n", n)->required();
  alpha->add_option("--d", d, "radius for a single Hamming graph");
  alpha->add_flag("--complement", complement);
  alpha->add_option("--k", k, "left length; selects the product Hbar(k,a) x Hbar(n,b)");
  add_distance(alpha, aa, "a", "alpha");
  add_distance(alpha, ab, "b", "beta");
  alpha->add_option("--kind", kind);
  alpha->add_option("--budget", budget, "search node budget");
  alpha->callback([&] {
    action = [&] {
      GraphSpec spec;
      int right_bits = 0;
      if (alpha->count("--k")) {
        DomainSets s{k, n, aa.resolve(k, "alpha"), ab.resolve(n, "beta"), parse_kind(kind)};
        spec = s.graph();
        right_bits = n;
      } else {
        spec = HammingGraphSpec{n, d, complement};
      }
      const auto r = independence_number(spec, Budget{budget});
      Json wit = Json::array();
      for (auto v : r.witness) {
        if (right_bits)
          wit.push_back(bits(v >> right_bits, total_bits(spec) - right_bits) + "," + bits(v & low_mask(right_bits), right_bits));
        else
          wit.push_back(bits(v, total_bits(spec)));
      }
      Json j;
      j["graph"] = name(spec);
      j["alpha"] = r.size;
      j["exact"] = r.exact;
      j["nodes"] = r.nodes;
      j["witness"] = wit;
      emit.json(j);
      return r.exact ? kOk : kUndecided;
    };
  });

  // hom-search
  int sn = 0, sd = 0, tn = 0, td = 0;
  bool plain = false;
  auto* hom = app.add_subcommand("hom-search", "search a homomorphism Hbar(sn,sd) -> Hbar(tn,td)");
  hom->add_option("src_n", sn)->required();
  hom->add_option("src_d", sd)->required();
  hom->add_option("dst_n", tn)->required();
  hom->add_option("dst_d", td)->required();
  hom->add_flag("--plain", plain, "use H(n,d) instead of the complements");
  hom->add_option("--budget", budget);
  hom->callback([&] {
    action = [&] {
      const HammingGraphSpec src{sn, sd, !plain}, dst{tn, td, !plain};
      const auto r = find_homomorphism(src, dst, Budget{budget});
      Json j;
      j["source"] = src.name();
      j["target"] = dst.name();
      j["status"] = r.status == HomStatus::Found ? "FOUND" : r.status == HomStatus::None ? "NONE" : "UNDECIDED";
      j["nodes"] = r.nodes;
      if (r.map) j["map"] = io::to_json(*r.map);
      emit.json(j);
      return r.status == HomStatus::Undecided ? kUndecided : kOk;
    };
  });

  // odd-cycle
  auto* odd = app.add_subcommand("odd-cycle", "shortest odd cycle of H(n,d) or Hbar(n,d)");
  odd->add_option("--n", n)->required();
  odd->add_option("--d", d)->required();
  odd->add_flag("--complement", complement);
  odd->callback([&] {
    action = [&] {
      const HammingGraphSpec g{n, d, complement};
      g.validate();
      const auto l = odd_girth(GraphSpec{g});
      Json j;
      j["graph"] = g.name();
      if (l) j["odd_girth"] = *l;
      else j["odd_girth"] = "infinite";
      emit.json(j);
      return kOk;
    };
  });

  // walks
  auto* walks = app.add_subcommand("walks", "closed walks of length m at a vertex of Hbar(n,d)");
  walks->add_option("--n", n)->required();
  walks->add_option("--d", d)->required();
  walks->add_option("--m", m)->required();
  walks->callback([&] {
    action = [&] {
      Json j;
      j["graph"] = HammingGraphSpec{n, d, true}.name();
      j["m"] = m;
      j["closed_walks"] = to_string(closed_walk_count(n, d, m));
      emit.json(j);
      return kOk;
    };
  });

  // region
  std::string rho_text;
  double step = 0.01, bmin = -1, bmax = -1;
  auto* reg = app.add_subcommand("region", "bound curves on alpha as CSV, one row per beta");
  reg->add_option("--rho", rho_text, "n/k, e.g. 3 or 1/3")->required();
  reg->add_option("--beta-step", step);
  reg->add_option("--beta-min", bmin, "default: one step");
  reg->add_option("--beta-max", bmax, "default: 1 - one step");
  reg->callback([&] {
    action = [&] {
      const double rho = parse_rat(rho_text).get_d();
      const double lo = bmin < 0 ? step : bmin, hi = bmax < 0 ? 1 - step : bmax;
      const auto rows = region(rho, grid(lo, hi, step));
      if (meta) out << "# hmaps " << kVersion << " region rho=" << rho_text << '\n';
      out << "beta,lb_ccb,lb_ccsam,lb_it,lb_tm3,ach_repetition,ach_majority,ach_separation\n";
      auto cell = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
      for (const auto& r : rows) {
        out << format_double(r.beta) << ',' << cell(r.lb_ccb) << ',' << cell(r.lb_ccsam) << ',' << cell(r.lb_it)
            << ',' << cell(r.lb_tm3) << ',' << cell(r.ach_repetition) << ',' << cell(r.ach_majority) << ','
            << cell(r.ach_separation) << '\n';
      }
      return kOk;
    };
  });

  // map
  std::string file, out_path, map_kind;
  int rho_int = 1, radius = 0;
  std::vector<std::string> codebook, cover, generator, subset;
  DistanceArg ma, mb;
  auto* map = app.add_subcommand("map", "build and check explicit maps F_2^k -> F_2^n");
  map->require_subcommand(1);
  auto* mnew = map->add_subcommand("new", "construct a map and print its JSON table");
  mnew->add_option("--kind", map_kind, "identity | repetition | majority | separation | linear")->required();
  mnew->add_option("--k", k);
  mnew->add_option("--n", n);
  mnew->add_option("--rho", rho_int, "repetitions");
  mnew->add_option("--radius", radius, "cover radius (separation)");
  mnew->add_option("--b", mb.value, "codebook separation (separation)");
  mnew->add_option("--codebook", codebook, "codewords as bit strings or hex");
  mnew->add_option("--cover", cover, "explicit cover centres");
  mnew->add_option("--generator", generator, "generator rows as bit strings or hex");
  mnew->add_option("--out", out_path);
  mnew->callback([&] {
    action = [&] {
      MapTable f;
      if (map_kind == "identity") f = repetition_map(k, 1);
      else if (map_kind == "repetition") f = repetition_map(k, rho_int);
      else if (map_kind == "majority") f = majority_map(k);
      else if (map_kind == "separation") {
        std::vector<Word> cb, cv;
        for (const auto& s : codebook) cb.push_back(parse_bits_or_hex(s, n));
        for (const auto& s : cover) cv.push_back(parse_bits_or_hex(s, k));
        f = separation_map(k, n, radius, cb, std::max(mb.value, 0),
                           cover.empty() ? std::nullopt : std::optional<std::vector<Word>>(cv));
      } else if (map_kind == "linear") {
        std::vector<Word> rows;
        for (const auto& s : generator) rows.push_back(parse_bits_or_hex(s, n));
        f = linear_map(rows, n);
      } else {
        throw DomainError("unknown map kind '" + map_kind + "'");
      }
      if (out_path.empty()) emit.json(io::to_json(f));
      else io::write_text_file(out_path, io::to_json(f).dump(2) + "\n");
      return kOk;
    };
  });
  auto* mverify = map->add_subcommand("verify", "exhaustive (a,b)-map check; prints OK or FAIL");
  mverify->add_option("--file", file)->required();
  add_distance(mverify, ma, "a", "alpha");
  add_distance(mverify, mb, "b", "beta");
  mverify->callback([&] {
    action = [&] {
      const MapTable f = load_map(file);
      const bool ok = verify_map(f, ma.resolve(f.k, "alpha"), mb.resolve(f.n, "beta"));
      out << (ok ? "OK" : "FAIL") << '\n';
      return ok ? kOk : kFail;
    };
  });
  auto* mprof = map->add_subcommand("profile", "min output distance over pairs farther than a, a = 0..k");
  mprof->add_option("--file", file)->required();
  mprof->callback([&] {
    action = [&] {
      const MapTable f = load_map(file);
      const auto p = distance_profile(f);
      Json prof = Json::array();
      for (int v : p.profile) {
        if (v == DistanceProfile::kInfinite) prof.push_back("infinite");
        else prof.push_back(v);
      }
      emit.json(Json{{"k", f.k}, {"n", f.n}, {"profile", prof}});
      return kOk;
    };
  });
  auto* mviol = map->add_subcommand("violations", "count pairs farther than a mapped within b");
  mviol->add_option("--file", file)->required();
  add_distance(mviol, ma, "a", "alpha");
  add_distance(mviol, mb, "b", "beta");
  mviol->add_option("--subset", subset, "restrict to these inputs (bit strings or hex)");
  mviol->callback([&] {
    action = [&] {
      const MapTable f = load_map(file);
      std::optional<std::vector<Word>> s;
      if (!subset.empty()) {
        s.emplace();
        for (const auto& x : subset) s->push_back(parse_bits_or_hex(x, f.k));
      }
      const int a = ma.resolve(f.k, "alpha"), b = mb.resolve(f.n, "beta");
      emit.json(Json{{"a", a}, {"b", b}, {"violations", count_violating_pairs(f, a, b, s)}});
      return kOk;
    };
  });

  // projective
  std::string variant = "map";
  DistanceArg qa, qb;
  auto* proj = app.add_subcommand("projective", "point configurations in P^{m-1}(F_2)");
  proj->require_subcommand(1);
  auto* pstats = proj->add_subcommand("stats", "Z_u, Z_v for every hyperplane");
  pstats->add_option("--file", file)->required();
  pstats->callback([&] {
    action = [&] {
      const auto cfg = io::config_from_json(io::read_json_file(file));
      Json rows = Json::array();
      for (const auto& s : hyperplane_stats(cfg))
        rows.push_back({{"w", s.w}, {"z_u", s.z_u}, {"z_v", s.z_v}});
      emit.json(Json{{"m", cfg.m}, {"hyperplanes", rows}});
      return kOk;
    };
  });
  auto* pcheck = proj->add_subcommand("check", "check the (a,b) hyperplane condition");
  pcheck->add_option("--file", file)->required();
  add_distance(pcheck, qa, "a", "alpha");
  add_distance(pcheck, qb, "b", "beta");
  pcheck->add_option("--variant", variant, "boxtimes | ltimes | map");
  pcheck->add_flag("--bad", certs, "also search a bad hyperplane in the corollary sense");
  pcheck->callback([&] {
    action = [&] {
      const auto cfg = io::config_from_json(io::read_json_file(file));
      const int a = qa.resolve(cfg.k(), "alpha"), b = qb.resolve(cfg.n(), "beta");
      const std::map<std::string, AbVariant> variants{
          {"boxtimes", AbVariant::Boxtimes}, {"ltimes", AbVariant::Ltimes}, {"map", AbVariant::Map}};
      const auto it = variants.find(variant);
      if (it == variants.end()) throw DomainError("unknown variant '" + variant + "'");
      const auto r = check_ab_condition(cfg, a, b, it->second);
      Json j{{"ok", r.ok}, {"spanning", r.spanning}};
      if (r.witness) j["witness"] = {{"w", r.witness->w}, {"z_u", r.witness->z_u}, {"z_v", r.witness->z_v}};
      if (certs) {
        const auto bad = find_bad_hyperplane(cfg, a, b);
        if (bad) j["bad_hyperplane"] = {{"w", bad->w}, {"z_u", bad->z_u}, {"z_v", bad->z_v}};
        else j["bad_hyperplane"] = nullptr;
      }
      emit.json(j);
      return r.ok ? kOk : kFail;
    };
  });
  auto* pfano = proj->add_subcommand("fano", "the seven-point configuration and its generator");
  pfano->add_option("--out", out_path, "also write the configuration JSON here");
  pfano->callback([&] {
    action = [&] {
      const auto cfg = fano_config();
      const auto rows = generator_matrix(cfg);
      if (!out_path.empty()) io::write_text_file(out_path, io::to_json(cfg).dump(2) + "\n");
      emit.json(Json{{"config", io::to_json(cfg)},
                     {"generator", bit_rows(rows, cfg.n())},
                     {"map_condition_a2_b3", check_ab_condition(cfg, 2, 3, AbVariant::Map).ok},
                     {"linear_map_verifies_a2_b3", verify_map(linear_map(rows, cfg.n()), 2, 3)}});
      return kOk;
    };
  });

  // lp-certify
  int gn = 0, gd = 0, hn = 0, hd = 0;
  bool gc = false, hc = false;
  auto* lpc = app.add_subcommand("lp-certify", "explicit certificates");
  lpc->require_subcommand(1);
  auto* lem = lpc->add_subcommand("strong-product", "strong-product certificate from theta_S(G-bar) and theta_S(H)");
  lem->add_option("--g-n", gn)->required();
  lem->add_option("--g-d", gd)->required();
  lem->add_flag("--g-complement", gc);
  lem->add_option("--h-n", hn)->required();
  lem->add_option("--h-d", hd)->required();
  lem->add_flag("--h-complement", hc);
  lem->add_flag("--certificates", certs, "dump the composed matrix");
  lem->callback([&] {
    action = [&] {
      const auto c = compose_lemma1_certificate(HammingGraphSpec{gn, gd, gc}, HammingGraphSpec{hn, hd, hc});
      Json j{{"g", c.g.name()},
             {"h", c.h.name()},
             {"theta_g_bar", to_string(c.theta_g_bar)},
             {"theta_h", to_string(c.theta_h)},
             {"c1", to_string(c.c1)},
             {"c2", to_string(c.c2)},
             {"bound", to_string(c.c1)},
             {"entrywise_ok", c.entrywise_ok},
             {"psd", c.psd.psd},
             {"rank", c.psd.rank}};
      if (certs) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < c.c_hat.dim; ++i) {
          std::vector<Rat> row(c.c_hat.data.begin() + static_cast<std::ptrdiff_t>(i * c.c_hat.dim),
                               c.c_hat.data.begin() + static_cast<std::ptrdiff_t>((i + 1) * c.c_hat.dim));
          rows.push_back(io::to_json(row));
        }
        j["c_hat"] = rows;
        j["pivots"] = io::to_json(c.psd.pivots);
      }
      emit.json(j);
      return kOk;
    };
  });
  auto* plot = lpc->add_subcommand("plotkin", "degree-one dual certificate for H(n,d)");
  plot->add_option("--n", n)->required();
  plot->add_option("--d", d)->required();
  plot->callback([&] {
    action = [&] {
      const auto p = plotkin_dual(n, d);
      emit.json(Json{{"graph", HammingGraphSpec::hamming(n, d).name()},
                     {"dual_spectrum", io::to_json(p.ghat.coeffs)},
                     {"bound", to_string(p.bound)}});
      return kOk;
    };
  });
  auto* lev = lpc->add_subcommand("levenshtein", "two-point primal certificate for H(n,d), d odd");
  lev->add_option("--n", n)->required();
  lev->add_option("--d", d)->required();
  lev->callback([&] {
    action = [&] {
      const auto p = levenshtein_primal(n, d);
      emit.json(Json{{"graph", HammingGraphSpec::hamming(n, d).name()},
                     {"feasible", p.feasible},
                     {"r", to_string(p.r)},
                     {"primal_spectrum", io::to_json(p.fhat.coeffs)},
                     {"bound", to_string(p.bound)}});
      return kOk;
    };
  });
  DistanceArg fa, fb;
  auto* fac = lpc->add_subcommand("factors", "product dual g(x,y) = f1(x) g1(y) from the two univariate optima");
  fac->add_option("--k", k)->required();
  fac->add_option("--n", n)->required();
  add_distance(fac, fa, "a", "alpha");
  add_distance(fac, fb, "b", "beta");
  fac->add_option("--kind", kind);
  fac->callback([&] {
    action = [&] {
      const int a = fa.resolve(k, "alpha"), b = fb.resolve(n, "beta");
      const auto t1 = theta_s_hamming(k, a), t2 = theta_s_hamming(n, b);
      const Rat bound = product_dual_from_factors(t1.primal, a, t2.dual, b, parse_kind(kind));
      emit.json(Json{{"theta_left", to_string(t1.value)},
                     {"theta_right", to_string(t2.value)},
                     {"bound", to_string(bound)},
                     {"decimal", bound.get_d()}});
      return kOk;
    };
  });

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kPrecondition;
  }
  emit.meta = meta;
  try {
    return action ? action() : kPrecondition;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace hmaps::cli
