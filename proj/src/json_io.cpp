#include "kellerlab/json_io.hpp"

#include "kellerlab/errors.hpp"
#include "kellerlab/parse.hpp"

namespace kellerlab {
namespace {

std::string coeff_str(const FieldElement& c) { return c.to_string(); }

FieldElement coeff_parse(const std::string& s) {
  LowerContext ctx;
  Poly p = parse_poly(s, ctx);
  if (!p.is_constant()) throw SyntaxError(0, "expected a constant coefficient");
  return p.constant_term();
}

Poly poly_parse(const std::string& s) {
  LowerContext ctx;
  return parse_poly(s, ctx);
}

}  // namespace

std::string symmetry_name(SymmetryType t) {
  switch (t) {
    case SymmetryType::Symmetric:
      return "symmetric";
    case SymmetryType::Skew:
      return "skew";
    default:
      return "neither";
  }
}

Json to_json(const Endo& f) {
  return Json{{"p", f.p.to_string()}, {"q", f.q.to_string()}};
}

Endo endo_from_json(const Json& j) {
  return Endo{poly_parse(j.at("p").get<std::string>()),
              poly_parse(j.at("q").get<std::string>())};
}

Json to_json(const Factor& f) {
  Json j;
  if (const auto* a = std::get_if<AffineFactor>(&f.kind())) {
    j["kind"] = "affine";
    j["m"] = Json::array({Json::array({coeff_str(a->m[0][0]), coeff_str(a->m[0][1])}),
                          Json::array({coeff_str(a->m[1][0]), coeff_str(a->m[1][1])})});
    j["t"] = Json::array({coeff_str(a->t[0]), coeff_str(a->t[1])});
  } else if (const auto* ex = std::get_if<ElementaryX>(&f.kind())) {
    j["kind"] = "elementary_x";
    j["h"] = ex->h.to_string();
    j["scale"] = coeff_str(ex->scale);
  } else {
    const auto& ey = std::get<ElementaryY>(f.kind());
    j["kind"] = "elementary_y";
    j["h"] = ey.h.to_string();
    j["scale"] = coeff_str(ey.scale);
  }
  return j;
}

Factor factor_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "affine") {
    AffineFactor a;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        a.m[r][c] = coeff_parse(j.at("m").at(r).at(c).get<std::string>());
    a.t[0] = coeff_parse(j.at("t").at(0).get<std::string>());
    a.t[1] = coeff_parse(j.at("t").at(1).get<std::string>());
    return Factor(std::move(a));
  }
  if (kind != "elementary_x" && kind != "elementary_y")
    throw SyntaxError(0, "unknown factor kind '" + kind + "'");
  Poly h = poly_parse(j.at("h").get<std::string>());
  FieldElement scale = coeff_parse(j.at("scale").get<std::string>());
  if (kind == "elementary_x") return Factor(ElementaryX{std::move(h), std::move(scale)});
  return Factor(ElementaryY{std::move(h), std::move(scale)});
}

Json to_json(const TameCertificate& c) {
  Json factors = Json::array();
  for (const Factor& f : c.factors) factors.push_back(to_json(f));
  return Json{{"subject", to_json(c.subject)}, {"factors", std::move(factors)}};
}

TameCertificate certificate_from_json(const Json& j) {
  TameCertificate c;
  c.subject = endo_from_json(j.at("subject"));
  for (const Json& f : j.at("factors")) c.factors.push_back(factor_from_json(f));
  return c;
}

Json to_json(const SymmetrizationTranscript& t) {
  Json steps = Json::array();
  for (const TranscriptStep& s : t.steps) {
    steps.push_back(Json{{"g", to_json(s.g)},
                         {"label", s.label},
                         {"certificate", to_json(s.certificate)}});
  }
  return Json{{"case", t.case_label},
              {"involution", t.target.name},
              {"witness", t.witness.to_string()},
              {"type", symmetry_name(t.type)},
              {"steps", std::move(steps)}};
}

Json to_json(const ParityReport& r) {
  Json j;
  j["applicable"] = r.applicable();
  auto axis = [](const std::optional<ParityAxisResult>& a) -> Json {
    if (!a) return nullptr;
    return Json{{"involution", a->involution}, {"type", symmetry_name(a->type)}};
  };
  j["axis01"] = axis(r.axis01);
  j["axis10"] = axis(r.axis10);
  return j;
}

Json to_json(const SearchResult& r) {
  Json moves = Json::array();
  for (const Endo& g : r.moves) moves.push_back(to_json(g));
  return Json{{"found", r.found},
              {"moves", std::move(moves)},
              {"witness", r.found ? r.witness.to_string() : ""},
              {"involution", r.involution},
              {"type", symmetry_name(r.type)},
              {"states_explored", r.states_explored}};
}

Json to_json(const DruzkowskiResult& r) {
  Json j{{"accepted", r.accepted},
         {"map", to_json(r.map)},
         {"jacobian", r.jacobian.to_string()}};
  j["inverse"] = r.inverse ? to_json(*r.inverse) : Json(nullptr);
  return j;
}

Json to_json(const SubalgebraExpr& e) {
  return Json{{"alpha_p", e.alpha_p.to_string()},
              {"alpha_q", e.alpha_q.to_string()},
              {"h", e.h.to_string()},
              {"restricted_jacobian", e.restricted_jacobian.to_string()}};
}

}  // namespace kellerlab
