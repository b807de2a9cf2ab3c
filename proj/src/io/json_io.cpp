#include "adedefect/io/json_io.hpp"

#include "adedefect/error.hpp"
#include "adedefect/numbers/rational.hpp"

namespace ade {

namespace {

const char* op_name(AlgebraicValue::Op op) {
  switch (op) {
    case AlgebraicValue::Op::Add: return "add";
    case AlgebraicValue::Op::Sub: return "sub";
    case AlgebraicValue::Op::Mul: return "mul";
    case AlgebraicValue::Op::Div: return "div";
    case AlgebraicValue::Op::Pow: return "pow";
  }
  return "add";
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::InvalidInput, "expected a rational, got " + j.dump());
}

Json node_to_json(const AlgebraicValue::Node& n) {
  switch (n.kind) {
    case AlgebraicValue::Kind::Rational: return to_string(n.value);
    case AlgebraicValue::Kind::RootOf: {
      Json coeffs = Json::array();
      for (const auto& c : n.poly) coeffs.push_back(to_string(c));
      return Json{{"root_of", coeffs}, {"seed", {to_string(n.seed_re), to_string(n.seed_im)}},
                  {"radius", to_string(n.radius)}};
    }
    case AlgebraicValue::Kind::Expr: {
      Json args = Json::array();
      for (const auto& a : n.args) args.push_back(node_to_json(*a));
      Json out{{"op", op_name(n.op)}, {"args", args}};
      if (n.op == AlgebraicValue::Op::Pow) out["exponent"] = n.exponent;
      return out;
    }
  }
  return nullptr;
}

std::vector<AlgebraicValue> values_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "expected an array of values");
  std::vector<AlgebraicValue> out;
  for (const auto& v : j) out.push_back(value_from_json(v));
  return out;
}

Json values_to_json(const std::vector<AlgebraicValue>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(value_to_json(v));
  return out;
}

const char* frame_name(FrameKind k) {
  switch (k) {
    case FrameKind::Linear: return "linear";
    case FrameKind::Supplied: return "supplied";
    case FrameKind::Unavailable: return "unavailable";
  }
  return "unavailable";
}

FrameKind parse_frame(const std::string& s) {
  if (s == "linear") return FrameKind::Linear;
  if (s == "supplied") return FrameKind::Supplied;
  if (s == "unavailable") return FrameKind::Unavailable;
  throw Error(ErrorCode::InvalidInput, "unknown frame kind '" + s + "'");
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidInput, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("field '") + key + "': " + e.what());
  }
}

Json optional_long(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<long> optional_long(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<long>(j, key);
}

}  // namespace

Json value_to_json(const AlgebraicValue& v) { return node_to_json(v.node()); }

AlgebraicValue value_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return AlgebraicValue(rational_from_json(j));
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "bad value " + j.dump());
  if (j.contains("root_of")) {
    UniPoly poly;
    for (const auto& c : j.at("root_of")) poly.push_back(rational_from_json(c));
    const Json& seed = j.at("seed");
    if (!seed.is_array() || seed.size() != 2) throw Error(ErrorCode::InvalidInput, "seed must be [re, im]");
    return AlgebraicValue::root_of(poly, rational_from_json(seed[0]), rational_from_json(seed[1]),
                                   rational_from_json(j.at("radius")));
  }
  const std::string op = field<std::string>(j, "op");
  std::vector<AlgebraicValue> args = values_from_json(j.at("args"));
  if (op == "pow") {
    if (args.size() != 1) throw Error(ErrorCode::InvalidInput, "pow takes one argument");
    return args[0].pow(field<long>(j, "exponent"));
  }
  if (args.size() != 2) throw Error(ErrorCode::InvalidInput, op + " takes two arguments");
  if (op == "add") return args[0] + args[1];
  if (op == "sub") return args[0] - args[1];
  if (op == "mul") return args[0] * args[1];
  if (op == "div") return args[0] / args[1];
  throw Error(ErrorCode::InvalidInput, "unknown op '" + op + "'");
}

Json point_to_json(const ProjectivePoint& p) { return values_to_json(p.coords()); }

ProjectivePoint point_from_json(const Json& j) { return ProjectivePoint(values_from_json(j)); }

Json record_to_json(const SingularPointRecord& r) {
  Json out{{"point", point_to_json(r.point)}, {"type", r.ade.to_string()}, {"frame", frame_name(r.frame_kind)}};
  if (r.v1) out["v1"] = values_to_json(*r.v1);
  if (r.v2) out["v2"] = values_to_json(*r.v2);
  return out;
}

SingularPointRecord record_from_json(const Json& j, const ADEType& default_type) {
  SingularPointRecord r;
  if (j.is_array()) {
    r.point = point_from_json(j);
    r.ade = default_type;
    return r;
  }
  r.point = point_from_json(j.at("point"));
  r.ade = j.contains("type") ? ADEType::parse(field<std::string>(j, "type")) : default_type;
  if (j.contains("v1")) r.v1 = values_from_json(j.at("v1"));
  if (j.contains("v2")) r.v2 = values_from_json(j.at("v2"));
  r.frame_kind = j.contains("frame") ? parse_frame(field<std::string>(j, "frame"))
                                     : (r.v1 ? FrameKind::Supplied : FrameKind::Unavailable);
  return r;
}

std::vector<SingularPointRecord> parse_points(const std::string& text, const ADEType& default_type) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("points file: ") + e.what());
  }
  if (j.is_object() && j.contains("points")) j = j.at("points");
  if (!j.is_array()) throw Error(ErrorCode::InvalidInput, "points file must hold an array");
  std::vector<SingularPointRecord> out;
  for (const auto& e : j) out.push_back(record_from_json(e, default_type));
  return out;
}

Json to_json(const RankResult& r) {
  return {{"rank", r.rank}, {"backend", to_string(r.backend)}, {"certified", r.certified}, {"precision", r.precision}};
}

RankResult rank_result_from_json(const Json& j) {
  return {field<long>(j, "rank"), parse_backend(field<std::string>(j, "backend")), field<bool>(j, "certified"),
          field<long>(j, "precision")};
}

Json to_json(const NamedRank& r) {
  Json out{{"name", r.name}, {"degree", r.degree}, {"rows", r.rows}, {"cols", r.cols}};
  out.update(to_json(r.result));
  return out;
}

NamedRank named_rank_from_json(const Json& j) {
  return {field<std::string>(j, "name"), field<int>(j, "degree"), field<std::size_t>(j, "rows"),
          field<std::size_t>(j, "cols"), rank_result_from_json(j)};
}

Json to_json(const DefectResult& d) {
  Json comps = Json::object();
  for (const auto& [k, v] : d.components) comps[k] = v;
  Json ranks = Json::array();
  for (const auto& r : d.ranks) ranks.push_back(to_json(r));
  return {{"delta", d.delta},       {"formula", d.formula},     {"components", comps},
          {"ranks", ranks},         {"certified", d.certified}, {"frame_dependent", d.frame_dependent}};
}

DefectResult defect_from_json(const Json& j) {
  DefectResult d;
  d.delta = field<long>(j, "delta");
  d.formula = field<std::string>(j, "formula");
  for (const auto& [k, v] : j.at("components").items()) d.components.push_back({k, v.get<long>()});
  for (const auto& r : j.at("ranks")) d.ranks.push_back(named_rank_from_json(r));
  d.certified = field<bool>(j, "certified");
  d.frame_dependent = field<bool>(j, "frame_dependent");
  return d;
}

Json to_json(const Check& c) { return {{"name", c.name}, {"pass", c.pass}, {"lhs", c.lhs}, {"rhs", c.rhs}}; }

Json to_json(const HodgeReport& h) {
  Json ranks = Json::array();
  for (const auto& r : h.rank_inputs) ranks.push_back(to_json(r));
  Json checks = Json::array();
  for (const auto& c : h.checks) checks.push_back(to_json(c));
  return {{"h11", h.h11},
          {"h12", optional_long(h.h12)},
          {"mu", h.mu},
          {"delta", h.delta},
          {"euler", optional_long(h.euler)},
          {"h3_O", optional_long(h.h3_O)},
          {"resolution", to_string(h.resolution)},
          {"formula_id", h.formula_id},
          {"rank_inputs", ranks},
          {"checks", checks}};
}

HodgeReport hodge_report_from_json(const Json& j) {
  HodgeReport h;
  h.h11 = field<long>(j, "h11");
  h.h12 = optional_long(j, "h12");
  h.mu = field<long>(j, "mu");
  h.delta = field<long>(j, "delta");
  h.euler = optional_long(j, "euler");
  h.h3_O = optional_long(j, "h3_O");
  const std::string res = field<std::string>(j, "resolution");
  if (res != "big" && res != "small") throw Error(ErrorCode::InvalidInput, "resolution must be big or small");
  h.resolution = res == "big" ? Resolution::Big : Resolution::Small;
  h.formula_id = field<std::string>(j, "formula_id");
  for (const auto& r : j.at("rank_inputs")) h.rank_inputs.push_back(named_rank_from_json(r));
  for (const auto& c : j.at("checks"))
    h.checks.push_back({field<std::string>(c, "name"), field<bool>(c, "pass"), field<long>(c, "lhs"),
                        field<long>(c, "rhs")});
  return h;
}

Json to_json(const Classification& c) {
  return {{"type", c.type.to_string()}, {"chart", c.chart}, {"corank", c.corank}, {"order", c.order},
          {"exact", c.exact}};
}

Json to_json(const ExampleReport& r) {
  Json records = Json::array();
  for (const auto& rec : r.records) records.push_back(record_to_json(rec));
  Json ranks = Json::array();
  for (const auto& nr : r.ranks) ranks.push_back(to_json(nr));
  Json out{{"name", r.name}, {"title", r.title}, {"nu", r.nu}, {"ranks", ranks}, {"defect", to_json(r.defect)}};
  const HodgeReport& shown = r.has_small ? r.small : r.big;
  out["h11"] = shown.h11;
  out["h12"] = optional_long(shown.h12);
  if (r.has_small) out["small"] = to_json(r.small);
  out["big"] = to_json(r.big);
  out["expected"] = {{"nu", r.expected.nu},
                     {"ranks", r.expected.ranks},
                     {"h11", r.expected.h11},
                     {"h12", r.expected.h12},
                     {"source", r.expected.source}};
  out["matches_expected"] = r.matches_expected;
  out["records"] = records;
  return out;
}

Json bundle_manifest(const ExampleBundle& b) {
  Json pts = Json::array();
  for (const auto& p : b.points) pts.push_back(point_to_json(p));
  std::vector<std::string> names = default_variable_names(b.nvars);
  return {{"name", b.name},
          {"title", b.title},
          {"surface", b.surface.to_string(names)},
          {"cover_degree", b.cover_degree},
          {"type", b.type.to_string()},
          {"points", pts},
          {"expected",
           {{"nu", b.expected.nu},
            {"ranks", b.expected.ranks},
            {"h11", b.expected.h11},
            {"h12", b.expected.h12},
            {"source", b.expected.source}}}};
}

}  // namespace ade
