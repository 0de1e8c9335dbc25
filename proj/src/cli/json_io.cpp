#include "sidon/json_io.hpp"

#include <sstream>

namespace sidon::io {

namespace {

std::vector<std::uint64_t> parse_uint_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw PreconditionError("empty entry in list '" + text + "'");
    item = item.substr(b, e - b + 1);
    std::size_t pos = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size() || item[0] == '-') throw PreconditionError("not a non-negative integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::uint64_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw PreconditionError(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  auto orders = parse_uint_list(text);
  if (orders.empty()) throw PreconditionError("group spec is empty");
  for (auto o : orders)
    if (o == 0) throw PreconditionError("cyclic orders must be positive");
  return GroupSpec{CyclicProductIso(orders)};
}

Json group_json(const AbelianGroup& g) {
  return Json{{"factors", g.factors()}, {"order", g.order()}};
}

AbelianGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("factors") || !j["factors"].is_array())
    throw PreconditionError("group must be an object with a 'factors' array");
  std::vector<std::uint64_t> f;
  for (const auto& x : j["factors"]) f.push_back(as_uint(x, "invariant factor"));
  return AbelianGroup(f);
}

Json elem_json(const AbelianGroup& g, Elem x) { return Json(g.decode(x)); }

Json set_json(const AbelianGroup& g, const ElemSet& s) {
  Json a = Json::array();
  for (Elem x : s) a.push_back(elem_json(g, x));
  return a;
}

ElemSet set_from_json(const AbelianGroup& g, const Json& j, const CyclicProductIso* source) {
  if (!j.is_array()) throw PreconditionError("set must be a JSON array");
  const std::size_t rank = source ? source->source_orders().size() : g.rank();
  ElemSet out;
  for (const auto& e : j) {
    std::vector<std::uint64_t> c;
    if (e.is_array()) {
      for (const auto& x : e) c.push_back(as_uint(x, "coordinate"));
    } else {
      if (rank > 1) throw PreconditionError("elements of a non-cyclic group need coordinate arrays");
      c.push_back(as_uint(e, "element"));
      if (rank == 0) c.clear();
    }
    if (c.size() != rank) throw PreconditionError("element has the wrong number of coordinates");
    if (source) {
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] >= source->source_orders()[i]) throw PreconditionError("coordinate out of range");
      out.push_back(source->forward(c));
    } else {
      out.push_back(g.encode(c));
    }
  }
  return out;
}

ElemSet parse_set(const GroupSpec& spec, const std::string& text) {
  const auto b = text.find_first_not_of(" \t");
  if (b != std::string::npos && text[b] == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const std::exception& e) {
      throw PreconditionError(std::string("malformed set: ") + e.what());
    }
    return set_from_json(spec.group(), j, &spec.iso);
  }
  Json j = Json::array();
  if (b != std::string::npos)
    for (auto v : parse_uint_list(text)) j.push_back(v);
  return set_from_json(spec.group(), j, &spec.iso);
}

Json field_json(const FiniteField& f) {
  return Json{{"p", f.characteristic()}, {"d", f.degree()}, {"q", f.order()}, {"modulus", f.modulus()}};
}

Json approx(double value, const char* precision) { return Json{{"approx", value}, {"precision", precision}}; }

Json sidon_report_json(const AbelianGroup& g, const SidonReport& r) {
  Json j;
  j["sidon"] = r.is_sidon;
  j["size"] = r.size;
  j["witness"] = nullptr;
  if (r.witness) {
    Json w = Json::array();
    for (Elem x : *r.witness) w.push_back(elem_json(g, x));
    j["witness"] = w;
  }
  j["t_set"] = set_json(g, r.t_set);
  j["energy"] = r.energy;
  j["trivial_energy"] = trivial_energy(r.size);
  j["density_ratio"] = approx(r.density_ratio);
  return j;
}

FrameworkSpec framework_spec_from_json(const Json& j) {
  if (!j.is_object()) throw PreconditionError("framework spec must be a JSON object");
  FrameworkSpec s;
  const std::string field = j.value("field", "rationals");
  if (field == "rationals")
    s.field = NumberField::rationals;
  else if (field == "gaussian")
    s.field = NumberField::gaussian;
  else if (field == "imaginary_quadratic")
    s.field = NumberField::imaginary_quadratic;
  else if (field == "real_quadratic")
    s.field = NumberField::real_quadratic;
  else
    throw PreconditionError("unsupported field '" + field + "'");
  if (j.contains("D")) s.d = as_uint(j["D"], "D");
  if (j.contains("m")) s.conductor = as_uint(j["m"], "m");
  if (!j.contains("R") || !j["R"].is_number()) throw PreconditionError("framework spec needs a numeric bound R");
  s.bound = j["R"].get<double>();
  const std::string rounding = j.value("rounding", "floor");
  if (rounding == "floor")
    s.rounding = Rounding::floor;
  else if (rounding == "nearest")
    s.rounding = Rounding::nearest;
  else
    throw PreconditionError("rounding must be floor or nearest");
  if (j.contains("max_primes")) s.max_primes = as_uint(j["max_primes"], "max_primes");
  if (!j.contains("components") || !j["components"].is_array()) throw PreconditionError("framework spec needs components");
  for (const auto& c : j["components"]) {
    const std::string type = c.value("type", "");
    FrameworkComponent fc{ComponentKind::log_norm};
    if (type == "log_norm") {
      const auto& sc = c.at("scale");
      if (sc.is_array() && sc.size() == 2) {
        fc.scale_num = as_uint(sc[0], "scale numerator");
        fc.scale_den = as_uint(sc[1], "scale denominator");
      } else {
        fc.scale_num = as_uint(sc, "scale");
      }
    } else if (type == "residue") {
      fc.kind = ComponentKind::residue;
      fc.modulus = as_uint(c.at("m"), "residue m");
    } else if (type == "arg4") {
      fc.kind = ComponentKind::arg4;
      fc.modulus = as_uint(c.at("n"), "arg4 n");
    } else if (type == "class") {
      fc.kind = ComponentKind::class_group;
    } else if (type == "log_ratio") {
      fc.kind = ComponentKind::log_ratio;
      if (c.contains("M")) fc.modulus = as_uint(c["M"], "log_ratio M");
    } else {
      throw PreconditionError("unknown component type '" + type + "'");
    }
    s.components.push_back(fc);
  }
  return s;
}

Json framework_spec_json(const FrameworkSpec& s) {
  static const char* fields[] = {"rationals", "gaussian", "imaginary_quadratic", "real_quadratic"};
  Json j;
  j["field"] = fields[static_cast<int>(s.field)];
  if (s.field == NumberField::imaginary_quadratic || s.field == NumberField::real_quadratic) j["D"] = s.d;
  j["m"] = s.conductor;
  j["R"] = s.bound;
  j["rounding"] = s.rounding == Rounding::floor ? "floor" : "nearest";
  j["max_primes"] = s.max_primes;
  Json comps = Json::array();
  for (const auto& c : s.components) {
    switch (c.kind) {
      case ComponentKind::log_norm:
        comps.push_back({{"type", "log_norm"}, {"scale", Json::array({c.scale_num, c.scale_den})}});
        break;
      case ComponentKind::residue: comps.push_back({{"type", "residue"}, {"m", c.modulus}}); break;
      case ComponentKind::arg4: comps.push_back({{"type", "arg4"}, {"n", c.modulus}}); break;
      case ComponentKind::class_group: comps.push_back({{"type", "class"}}); break;
      case ComponentKind::log_ratio: {
        Json x{{"type", "log_ratio"}};
        if (c.modulus) x["M"] = c.modulus;
        comps.push_back(x);
        break;
      }
    }
  }
  j["components"] = comps;
  return j;
}

}  // namespace sidon::io
