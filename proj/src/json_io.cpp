#include "hopf/json_io.hpp"

namespace hopf::io {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::SchemaError, (path.empty() ? "/" : path) + ": " + msg);
}

json terms_to_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({e.p, e.q, c.real(), c.imag()});
  return out;
}

Polynomial terms_from(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of [p, q, re, im]");
  Polynomial::Terms terms;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "/" + std::to_string(i);
    const json& t = j[i];
    if (!t.is_array() || t.size() != 4) schema(at, "expected [p, q, re, im]");
    const int p = int_from(t[0], at + "/0"), q = int_from(t[1], at + "/1");
    if (p < 0 || q < 0) schema(at, "exponents must be nonnegative");
    const Exponent e{p, q};
    if (terms.count(e)) schema(at, "duplicate exponent pair");
    terms[e] = {real_from(t[2], at + "/2"), real_from(t[3], at + "/3")};
  }
  return Polynomial(std::move(terms));
}

}  // namespace

const json& require(const json& payload, const std::string& key, const std::string& path) {
  if (!payload.is_object()) schema(path, "expected an object");
  const auto it = payload.find(key);
  if (it == payload.end()) schema(path + "/" + key, "missing required field");
  return *it;
}

json to_json(Complex c) { return json::array({c.real(), c.imag()}); }

json to_json(Point p) { return json::array({p.z.real(), p.z.imag(), p.w.real(), p.w.imag()}); }

json to_json(const ModelPoint& m) { return {{"zeta", to_json(m.zeta)}, {"sphere", to_json(m.sphere)}}; }

json to_json(const PolyMap& m) { return {{"conj", m.anti()}, {"P", terms_to_json(m.p())}, {"Q", terms_to_json(m.q())}}; }

json to_json(const Contraction& f) {
  json j{{"class", std::string(to_string(f.cls()))}};
  switch (f.cls()) {
    case WehlerClass::IV:
    case WehlerClass::IIb:
    case WehlerClass::IIcPrime: j["alpha"] = to_json(f.alpha()); break;
    case WehlerClass::III:
    case WehlerClass::IIa:
    case WehlerClass::IIaTilde:
      j["delta"] = to_json(f.delta());
      j["r"] = f.r();
      break;
    case WehlerClass::IIc:
      j["alpha"] = to_json(f.alpha());
      j["delta"] = to_json(f.delta());
      break;
    case WehlerClass::IIbTilde: j["alpha"] = to_json(f.alpha()); break;
  }
  if (f.cls() == WehlerClass::IIaTilde || f.cls() == WehlerClass::IIbTilde) j["c"] = to_json(f.c());
  return j;
}

json to_json(const EtaSpec& e) { return {{"q", e.q}, {"B", e.B}, {"C", e.C}}; }

json to_json(const ChainMap& c) {
  json out = json::array();
  for (const auto& n : c.nodes()) {
    json j{{"kind", std::string(to_string(n.kind))}, {"inverse", n.inverted}};
    switch (n.kind) {
      case NodeKind::Poly: j["map"] = to_json(n.map); break;
      case NodeKind::RadialTwist: j["coef"] = n.value; break;
      case NodeKind::Scale: j["s"] = n.value; break;
      case NodeKind::FlowSegment:
        j["contraction"] = to_json(*n.f);
        j["t"] = n.value;
        break;
      case NodeKind::Trivialize:
        j["contraction"] = to_json(*n.f);
        j["eta"] = to_json(n.eta);
        break;
      case NodeKind::SphereNormalize: j["eta"] = to_json(n.eta); break;
      case NodeKind::CircleSquareCover: j["variant"] = n.variant == 1 ? "a'" : "a''"; break;
      case NodeKind::Twist: j["angle"] = n.value; break;
      default: break;
    }
    out.push_back(std::move(j));
  }
  return out;
}

json to_json(const PicardDatum& d) {
  json j{{"zeta", to_json(d.zeta)}, {"parity", std::string(to_string(d.parity))}};
  if (d.exists) {
    j["status"] = {{"circle_radius", d.circle_radius}};
  } else {
    j["status"] = "none";
  }
  return j;
}

json to_json(const GroupDescriptor& g) {
  return {{"presentation", g.presentation}, {"dimension", g.dimension}, {"notes", g.notes}};
}

json to_json(const RealLocus& l) {
  json j{{"locus", std::string(to_string(l.type))}};
  if (l.elliptic_parameter) j["elliptic_parameter"] = to_json(*l.elliptic_parameter);
  return j;
}

json to_json(const QuotientDescriptor& q) {
  json j{{"space", q.space}, {"orientation_preserving", q.orientation_preserving}};
  if (q.locus_image) j["locus_image"] = std::string(to_string(*q.locus_image));
  if (q.double_cover) j["cover"] = q.deck_note;
  return j;
}

json to_json(const CommutantElement& e) {
  json p = json::array();
  for (auto c : e.params) p.push_back(to_json(c));
  return {{"class", std::string(to_string(e.cls))}, {"params", p}, {"map", to_json(e.map)}};
}

double real_from(const json& j, const std::string& path) {
  if (!j.is_number()) schema(path, "expected a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) schema(path, "must be finite");
  return x;
}

int int_from(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(path, "expected an integer");
  return j.get<int>();
}

Complex complex_from(const json& j, const std::string& path) {
  if (j.is_number()) return real_from(j, path);
  if (!j.is_array() || j.size() != 2) schema(path, "expected [re, im] or a number");
  return {real_from(j[0], path + "/0"), real_from(j[1], path + "/1")};
}

Point point_from(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 4) schema(path, "expected [z_re, z_im, w_re, w_im]");
  double v[4];
  for (int i = 0; i < 4; ++i) v[i] = real_from(j[i], path + "/" + std::to_string(i));
  return {{v[0], v[1]}, {v[2], v[3]}};
}

ModelPoint model_point_from(const json& j, const std::string& path) {
  return {complex_from(require(j, "zeta", path), path + "/zeta"),
          point_from(require(j, "sphere", path), path + "/sphere")};
}

PolyMap polymap_from(const json& j, const std::string& path) {
  const json& conj = require(j, "conj", path);
  if (!conj.is_boolean()) schema(path + "/conj", "expected a boolean");
  return PolyMap(conj.get<bool>(), terms_from(require(j, "P", path), path + "/P"),
                 terms_from(require(j, "Q", path), path + "/Q"));
}

Contraction contraction_from(const json& j, const std::string& path) {
  const json& cls = require(j, "class", path);
  if (!cls.is_string()) schema(path + "/class", "expected a class name");
  WehlerClass c;
  try {
    c = wehler_class_from_string(cls.get<std::string>());
  } catch (const Error& e) {
    schema(path + "/class", e.what());
  }
  auto cx = [&](const char* key) { return complex_from(require(j, key, path), path + "/" + key); };
  auto r = [&] { return int_from(require(j, "r", path), path + "/r"); };
  switch (c) {
    case WehlerClass::IV: return Contraction::iv(cx("alpha"));
    case WehlerClass::III: return Contraction::iii(cx("delta"), r());
    case WehlerClass::IIa: return Contraction::iia(cx("delta"), r());
    case WehlerClass::IIb: return Contraction::iib(cx("alpha"));
    case WehlerClass::IIc: return Contraction::iic(cx("alpha"), cx("delta"));
    case WehlerClass::IIcPrime: return Contraction::iic_prime(cx("alpha"));
    case WehlerClass::IIaTilde: return Contraction::iia_tilde(cx("delta"), r(), cx("c"));
    case WehlerClass::IIbTilde: return Contraction::iib_tilde(cx("alpha"), cx("c"));
  }
  schema(path, "unreachable");
}

ChainMap chain_from(const json& j, const std::string& path) {
  if (!j.is_array()) schema(path, "expected an array of chain nodes");
  ChainMap c;
  for (size_t i = 0; i < j.size(); ++i) {
    const std::string at = path + "/" + std::to_string(i);
    const json& n = j[i];
    const json& kind = require(n, "kind", at);
    if (!kind.is_string()) schema(at + "/kind", "expected a string");
    ChainNode node;
    NodeKind k;
    try {
      k = node_kind_from_string(kind.get<std::string>());
    } catch (const Error& e) {
      schema(at + "/kind", e.what());
    }
    auto num = [&](const char* key) { return real_from(require(n, key, at), at + "/" + key); };
    switch (k) {
      case NodeKind::Poly: node = ChainNode::poly(polymap_from(require(n, "map", at), at + "/map")); break;
      case NodeKind::RadialTwist: node = ChainNode::radial_twist(num("coef")); break;
      case NodeKind::Scale: node = ChainNode::scale(num("s")); break;
      case NodeKind::FlowSegment:
        node = ChainNode::flow_segment(contraction_from(require(n, "contraction", at), at + "/contraction"), num("t"));
        break;
      case NodeKind::Trivialize:
        node = ChainNode::trivialize(contraction_from(require(n, "contraction", at), at + "/contraction"));
        break;
      case NodeKind::SphereNormalize: {
        const json& e = require(n, "eta", at);
        node = ChainNode::sphere_normalize({int_from(require(e, "q", at + "/eta"), at + "/eta/q"),
                                            real_from(require(e, "B", at + "/eta"), at + "/eta/B"),
                                            real_from(require(e, "C", at + "/eta"), at + "/eta/C")});
        break;
      }
      case NodeKind::CircleSquareCover: {
        const json& v = require(n, "variant", at);
        if (v != "a'" && v != "a''") schema(at + "/variant", "expected \"a'\" or \"a''\"");
        node = ChainNode::cover(v == "a'" ? 1 : 2);
        break;
      }
      case NodeKind::Twist: node = ChainNode::twist(num("angle")); break;
      case NodeKind::RealFrame: node = ChainNode::real_frame(); break;
      case NodeKind::FiberTwist: node = ChainNode::fiber_twist(); break;
      case NodeKind::Conj: node = ChainNode::conjugate(); break;
    }
    if (n.contains("inverse")) {
      if (!n["inverse"].is_boolean()) schema(at + "/inverse", "expected a boolean");
      node.inverted = n["inverse"].get<bool>();
    }
    c.then(std::move(node));
  }
  return c;
}

Parity parity_from(const json& j, const std::string& path) {
  if (!j.is_string()) schema(path, "expected \"even\" or \"odd\"");
  try {
    return parity_from_string(j.get<std::string>());
  } catch (const Error& e) {
    schema(path, e.what());
  }
}

Eigen::Matrix2cd matrix_from(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) schema(path, "expected [[a, b], [c, d]] of complex entries");
  Eigen::Matrix2cd m;
  for (int r = 0; r < 2; ++r) {
    const std::string row = path + "/" + std::to_string(r);
    if (!j[r].is_array() || j[r].size() != 2) schema(row, "expected a row of two complex entries");
    for (int c = 0; c < 2; ++c) m(r, c) = complex_from(j[r][c], row + "/" + std::to_string(c));
  }
  return m;
}

RealStructureSpec structure_from(const Contraction& f, const json& j, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object");
  if (j.contains("lift")) return make_real_structure(f, polymap_from(j["lift"], path + "/lift"));
  return canonical_structure(f, parity_from(require(j, "parity", path), path + "/parity"));
}

}  // namespace hopf::io
