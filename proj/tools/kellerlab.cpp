#include <CLI11.hpp>

#include <iostream>
#include <string>

#include "kellerlab/engines.hpp"
#include "kellerlab/errors.hpp"
#include "kellerlab/harness.hpp"
#include "kellerlab/json_io.hpp"
#include "kellerlab/parse.hpp"

namespace {

using namespace kellerlab;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Common {
  bool json = false;
  bool real_mode = false;
};

Poly parse_arg(const std::string& src, const Common& common) {
  LowerContext ctx;
  ctx.real_mode = common.real_mode;
  return parse_poly(src, ctx);
}

Endo parse_endo(const std::string& p, const std::string& q, const Common& common) {
  return Endo{parse_arg(p, common), parse_arg(q, common)};
}

void emit(const Common& common, const Json& j, const std::string& text) {
  if (common.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

std::string endo_text(const Endo& f) { return f.to_string(); }

// Resolves an involution argument: either a builtin name or an explicit pair.
Endo resolve_involution(const std::string& name, const std::string& p,
                        const std::string& q, const Common& common) {
  if (!name.empty()) return builtin_involution(name).endo;
  return parse_endo(p, q, common);
}

int cmd_jacobian(const Common& common, const std::string& p, const std::string& q) {
  Poly j = jacobian_of(parse_endo(p, q, common));
  emit(common, Json{{"jacobian", j.to_string()}}, j.to_string());
  return kOk;
}

int cmd_compose(const Common& common, const std::string& gp, const std::string& gq,
                const std::string& fp, const std::string& fq) {
  Endo r = compose(parse_endo(gp, gq, common), parse_endo(fp, fq, common));
  emit(common, to_json(r), endo_text(r));
  return kOk;
}

int cmd_apply(const Common& common, const std::string& p, const std::string& q,
              const std::string& r) {
  Poly out = apply(parse_endo(p, q, common), parse_arg(r, common));
  emit(common, Json{{"result", out.to_string()}}, out.to_string());
  return kOk;
}

int cmd_decompose(const Common& common, const std::string& p, const std::string& q) {
  DecomposeResult res = decompose(parse_endo(p, q, common));
  if (!res.ok()) {
    const char* why =
        res.status == DecomposeStatus::NotKeller ? "NotKeller" : "NotReducible";
    emit(common, Json{{"status", why}}, std::string("rejected: ") + why);
    return kNegative;
  }
  Json j = to_json(*res.certificate);
  j["status"] = "Ok";
  emit(common, j,
       "decomposed into " + std::to_string(res.certificate->factors.size()) +
           " factor(s)");
  if (!common.json)
    std::cout << to_json(*res.certificate).dump(2) << "\n";
  return kOk;
}

int cmd_invert(const Common& common, const std::string& p, const std::string& q) {
  DecomposeResult res = decompose(parse_endo(p, q, common));
  if (!res.ok()) {
    emit(common, Json{{"status", "NotInvertible"}}, "rejected: not invertible");
    return kNegative;
  }
  Endo inv = invert(*res.certificate);
  emit(common, to_json(inv), endo_text(inv));
  return kOk;
}

int cmd_classify(const Common& common, const std::string& name, const std::string& p,
                 const std::string& q) {
  Endo s = resolve_involution(name, p, q, common);
  ConjClass cls = classify_involution(s);
  std::string label = cls == ConjClass::Cminus1 ? "Cminus1" : "Cplus1";
  emit(common, Json{{"class", label}}, label);
  return kOk;
}

int cmd_verify_conjugation(const Common& common, const std::string& gp,
                           const std::string& gq, const std::string& sname,
                           const std::string& sp, const std::string& sq,
                           const std::string& tname, const std::string& tp,
                           const std::string& tq) {
  Endo g = parse_endo(gp, gq, common);
  Endo s = resolve_involution(sname, sp, sq, common);
  Endo t = resolve_involution(tname, tp, tq, common);
  bool ok = verify_conjugation(g, s, t);
  emit(common, Json{{"verified", ok}}, ok ? "verified" : "failed");
  return ok ? kOk : kNegative;
}

int cmd_cmw_express(const Common& common, const std::string& a, const std::string& r) {
  std::optional<UniPoly> h = express_in(parse_arg(a, common), parse_arg(r, common));
  if (!h) {
    emit(common, Json{{"status", "NotInSubalgebra"}}, "rejected: not in k[A]");
    return kNegative;
  }
  emit(common, Json{{"h", h->to_string()}}, h->to_string());
  return kOk;
}

int cmd_alpha_restriction(const Common& common, const std::string& p,
                          const std::string& q, const std::string& mode) {
  AlphaRestrictionMode m = mode == "skew" ? AlphaRestrictionMode::SkewP
                                          : AlphaRestrictionMode::SymmetricP;
  SubalgebraExpr e = alpha_restriction_check(parse_endo(p, q, common), m);
  emit(common, to_json(e),
       "alpha(p) = " + e.alpha_p.to_string() + "\nalpha(q) = " + e.alpha_q.to_string() +
           "\nH = " + e.h.to_string() +
           "\nrestricted jacobian = " + e.restricted_jacobian.to_string());
  return kOk;
}

int cmd_degree1(const Common& common, const std::string& p, const std::string& q) {
  Degree1Result r = degree1_reduce(parse_endo(p, q, common));
  Json j{{"inverse", to_json(r.inverse)},
         {"normalizer", to_json(r.normalizer)},
         {"normalized", to_json(r.normalized)}};
  emit(common, j, "inverse: " + endo_text(r.inverse));
  return kOk;
}

int cmd_wang(const Common& common, const std::string& p, const std::string& q) {
  WangResult r = wang_special(parse_endo(p, q, common));
  Json j{{"inverse", to_json(r.inverse)}, {"branch", r.branch}};
  j["right_move"] = r.right_move ? to_json(*r.right_move) : Json(nullptr);
  emit(common, j, "inverse: " + endo_text(r.inverse) + "\nbranch: " + r.branch);
  return kOk;
}

int cmd_symmetrize(const Common& common, const std::string& p, const std::string& q) {
  SymmetrizationTranscript t =
      symmetrize_deg2(parse_endo(p, q, common), common.real_mode);
  emit(common, to_json(t),
       "case: " + t.case_label + "\nwitness: " + t.witness.to_string() +
           "\ninvolution: " + t.target.name + " (" + symmetry_name(t.type) + ")");
  return kOk;
}

int cmd_parity(const Common& common, const std::string& p, const std::string& q) {
  ParityReport r = parity_classify(parse_endo(p, q, common));
  std::string text;
  if (r.axis01)
    text += "axis (0,1): " + r.axis01->involution + " (" +
            symmetry_name(r.axis01->type) + ")\n";
  if (r.axis10)
    text += "axis (1,0): " + r.axis10->involution + " (" +
            symmetry_name(r.axis10->type) + ")\n";
  if (!r.applicable()) text = "not applicable: mixed parity on both axes\n";
  text.pop_back();
  emit(common, to_json(r), text);
  return r.applicable() ? kOk : kNegative;
}

int cmd_search(const Common& common, const std::string& a, unsigned depth,
               unsigned degree_cap, unsigned height_cap, size_t state_cap) {
  SearchResult r =
      symmetrize_search(parse_arg(a, common), depth, degree_cap, height_cap, state_cap);
  std::string text = r.found ? "found after exploring " +
                                   std::to_string(r.states_explored) +
                                   " state(s); witness: " + r.witness.to_string() +
                                   " (" + r.involution + ", " + symmetry_name(r.type) +
                                   ")"
                             : "not found within bounds";
  emit(common, to_json(r), text);
  return r.found ? kOk : kNegative;
}

int cmd_druzkowski(const Common& common, const std::string& l1, const std::string& l2) {
  DruzkowskiResult r = druzkowski2(parse_arg(l1, common), parse_arg(l2, common));
  std::string text =
      r.accepted ? "accepted; inverse: " + endo_text(*r.inverse)
                 : "rejected: jacobian = " + r.jacobian.to_string();
  emit(common, to_json(r), text);
  return r.accepted ? kOk : kNegative;
}

int cmd_random_tame(const Common& common, uint64_t seed, unsigned factors,
                    unsigned max_elem_degree, unsigned height,
                    const std::string& field) {
  GenSpec spec;
  spec.seed = seed;
  spec.factor_count = factors;
  spec.max_elem_degree = max_elem_degree;
  spec.coeff_height = height;
  if (field == "gaussian")
    spec.field_mode = FieldMode::Gaussian;
  else if (field == "real")
    spec.field_mode = FieldMode::RealRadical;
  else
    spec.field_mode = FieldMode::Rational;
  TameSample s = random_tame(spec);
  Json j{{"map", to_json(s.endo)}, {"certificate", to_json(s.certificate)}};
  emit(common, j, endo_text(s.endo));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic workbench for polynomial endomorphisms of k[x,y]"};
  app.require_subcommand(1);

  Common common;
  app.add_flag("--json", common.json, "emit machine-readable JSON");
  app.add_flag("--real", common.real_mode, "restrict coefficients to real towers");

  std::string p, q, gp, gq, fp, fq, r, a, sname, sp, sq, tname, tp, tq;
  std::string mode = "symmetric", field = "rational", l1, l2;
  unsigned depth = 1, degree_cap = 3, height_cap = 1;
  size_t state_cap = 200000;
  uint64_t seed = 0;
  unsigned factors = 3, max_elem_degree = 3, height = 3;

  auto* c_jac = app.add_subcommand("jacobian", "Jacobian determinant of (p,q)");
  c_jac->add_option("-p", p)->required();
  c_jac->add_option("-q", q)->required();

  auto* c_compose = app.add_subcommand("compose", "composition gf (g after f)");
  c_compose->add_option("--gp", gp)->required();
  c_compose->add_option("--gq", gq)->required();
  c_compose->add_option("--fp", fp)->required();
  c_compose->add_option("--fq", fq)->required();

  auto* c_apply = app.add_subcommand("apply", "substitute x->p, y->q into r");
  c_apply->add_option("-p", p)->required();
  c_apply->add_option("-q", q)->required();
  c_apply->add_option("-r", r)->required();

  auto* c_dec = app.add_subcommand("decompose", "tame decomposition certificate");
  c_dec->add_option("-p", p)->required();
  c_dec->add_option("-q", q)->required();

  auto* c_inv = app.add_subcommand("invert", "inverse via tame decomposition");
  c_inv->add_option("-p", p)->required();
  c_inv->add_option("-q", q)->required();

  auto* c_cls = app.add_subcommand("classify-involution", "conjugacy class of an involution");
  c_cls->add_option("--name", sname, "builtin involution name");
  c_cls->add_option("-p", p);
  c_cls->add_option("-q", q);

  auto* c_ver = app.add_subcommand("verify-conjugation", "check g^-1 s g = t");
  c_ver->add_option("--gp", gp)->required();
  c_ver->add_option("--gq", gq)->required();
  c_ver->add_option("--s", sname, "builtin name for s");
  c_ver->add_option("--sp", sp);
  c_ver->add_option("--sq", sq);
  c_ver->add_option("--t", tname, "builtin name for t");
  c_ver->add_option("--tp", tp);
  c_ver->add_option("--tq", tq);

  auto* c_cmw = app.add_subcommand("cmw-express", "express R in k[A] as H(A)");
  c_cmw->add_option("-a", a)->required();
  c_cmw->add_option("-r", r)->required();

  auto* c_alpha = app.add_subcommand("alpha-restriction", "restricted exchange involution on k[p,q]");
  c_alpha->add_option("-p", p)->required();
  c_alpha->add_option("-q", q)->required();
  c_alpha->add_option("--mode", mode)->check(CLI::IsMember({"symmetric", "skew"}));

  auto* c_d1 = app.add_subcommand("degree1", "explicit inverse when deg p = 1");
  c_d1->add_option("-p", p)->required();
  c_d1->add_option("-q", q)->required();

  auto* c_wang = app.add_subcommand("wang", "inverse when deg p, deg q <= 2");
  c_wang->add_option("-p", p)->required();
  c_wang->add_option("-q", q)->required();

  auto* c_sym = app.add_subcommand("symmetrize", "symmetrization transcript for deg p <= 2");
  c_sym->add_option("-p", p)->required();
  c_sym->add_option("-q", q)->required();

  auto* c_par = app.add_subcommand("parity", "parity-profile classification");
  c_par->add_option("-p", p)->required();
  c_par->add_option("-q", q)->required();

  auto* c_search = app.add_subcommand("search-symmetrize", "bounded search for symmetrizing moves");
  c_search->add_option("-a", a)->required();
  c_search->add_option("--depth", depth);
  c_search->add_option("--degree-cap", degree_cap);
  c_search->add_option("--height-cap", height_cap);
  c_search->add_option("--state-cap", state_cap);

  auto* c_dru = app.add_subcommand("druzkowski", "cubic-linear map acceptance at n = 2");
  c_dru->add_option("--l1", l1)->required();
  c_dru->add_option("--l2", l2)->required();

  auto* c_rt = app.add_subcommand("random-tame", "deterministic random tame map");
  c_rt->add_option("--seed", seed);
  c_rt->add_option("--factors", factors);
  c_rt->add_option("--max-elem-degree", max_elem_degree);
  c_rt->add_option("--height", height);
  c_rt->add_option("--field", field)->check(CLI::IsMember({"rational", "gaussian", "real"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (app.got_subcommand(c_jac)) return cmd_jacobian(common, p, q);
    if (app.got_subcommand(c_compose)) return cmd_compose(common, gp, gq, fp, fq);
    if (app.got_subcommand(c_apply)) return cmd_apply(common, p, q, r);
    if (app.got_subcommand(c_dec)) return cmd_decompose(common, p, q);
    if (app.got_subcommand(c_inv)) return cmd_invert(common, p, q);
    if (app.got_subcommand(c_cls)) {
      if (sname.empty() && (p.empty() || q.empty())) {
        std::cerr << "classify-involution needs --name or both -p and -q\n";
        return kUsage;
      }
      return cmd_classify(common, sname, p, q);
    }
    if (app.got_subcommand(c_ver)) {
      if ((sname.empty() && (sp.empty() || sq.empty())) ||
          (tname.empty() && (tp.empty() || tq.empty()))) {
        std::cerr << "verify-conjugation needs --s/--t or explicit pairs\n";
        return kUsage;
      }
      return cmd_verify_conjugation(common, gp, gq, sname, sp, sq, tname, tp, tq);
    }
    if (app.got_subcommand(c_cmw)) return cmd_cmw_express(common, a, r);
    if (app.got_subcommand(c_alpha)) return cmd_alpha_restriction(common, p, q, mode);
    if (app.got_subcommand(c_d1)) return cmd_degree1(common, p, q);
    if (app.got_subcommand(c_wang)) return cmd_wang(common, p, q);
    if (app.got_subcommand(c_sym)) return cmd_symmetrize(common, p, q);
    if (app.got_subcommand(c_par)) return cmd_parity(common, p, q);
    if (app.got_subcommand(c_search))
      return cmd_search(common, a, depth, degree_cap, height_cap, state_cap);
    if (app.got_subcommand(c_dru)) return cmd_druzkowski(common, l1, l2);
    if (app.got_subcommand(c_rt))
      return cmd_random_tame(common, seed, factors, max_elem_degree, height, field);
  } catch (const SyntaxError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}
