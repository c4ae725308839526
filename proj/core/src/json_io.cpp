#include "spin7/json_io.hpp"

#include <cstdio>
#include <cstdlib>

#include <json.hpp>

#include "spin7/blade.hpp"

namespace spin7 {

namespace {

using nlohmann::json;

json parse_checked(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw JsonError("malformed JSON document");
  return j;
}

double number_field(const json& j, const char* field) {
  if (!j.contains(field)) throw JsonError(std::string("missing field \"") + field + "\"");
  const json& v = j.at(field);
  if (!v.is_number()) throw JsonError(std::string("field \"") + field + "\" must be a number");
  return v.get<double>();
}

Blade blade_from_key(const std::string& key) {
  if (key.empty()) return 0;
  if (key.back() == ',')
    throw JsonError("coeffs key \"" + key + "\": trailing comma");
  Blade out = 0;
  int prev = 0;
  size_t pos = 0;
  while (pos < key.size()) {
    size_t comma = key.find(',', pos);
    if (comma == std::string::npos) comma = key.size();
    const std::string token = key.substr(pos, comma - pos);
    if (token.size() != 1 || token[0] < '1' || token[0] > '8')
      throw JsonError("coeffs key \"" + key + "\": indices must be integers in 1..8");
    const int idx = token[0] - '0';
    if (idx <= prev)
      throw JsonError("coeffs key \"" + key + "\": indices must be strictly increasing");
    prev = idx;
    out |= blade_bit(idx);
    pos = comma + 1;
  }
  return out;
}

std::string blade_key(Blade b) {
  std::string key;
  for (int idx : blade_indices(b)) {
    if (!key.empty()) key += ',';
    key += static_cast<char>('0' + idx);
  }
  return key;
}

void append_kv(std::string& out, const char* key, const std::string& value, bool first = false) {
  if (!first) out += ',';
  out += '"';
  out += key;
  out += "\":";
  out += value;
}

std::string real_array(const double* data, size_t count) {
  std::string out = "[";
  for (size_t i = 0; i < count; ++i) {
    if (i) out += ',';
    out += format_real(data[i]);
  }
  out += ']';
  return out;
}

const char* subspace_name(PerturbSubspace s) {
  switch (s) {
    case PerturbSubspace::seven: return "7";
    case PerturbSubspace::twentyseven: return "27";
    case PerturbSubspace::mixed: return "mixed";
  }
  return "27";
}

PerturbSubspace subspace_from_json(const json& v) {
  std::string name;
  if (v.is_string()) {
    name = v.get<std::string>();
  } else if (v.is_number_integer()) {
    name = std::to_string(v.get<long long>());
  } else {
    throw JsonError("field \"subspace\" must be \"7\", \"27\", or \"mixed\"");
  }
  if (name == "7") return PerturbSubspace::seven;
  if (name == "27") return PerturbSubspace::twentyseven;
  if (name == "mixed") return PerturbSubspace::mixed;
  throw JsonError("field \"subspace\" must be \"7\", \"27\", or \"mixed\"");
}

FlowStart start_from_json(const json& v) {
  FlowStart start;
  if (v.is_string()) {
    const std::string name = v.get<std::string>();
    if (name == "random_sphere") {
      start.kind = StartKind::random_sphere;
    } else if (name == "perturbed_cayley") {
      start.kind = StartKind::perturbed_cayley;
    } else {
      throw JsonError("field \"start\" must name random_sphere or perturbed_cayley");
    }
    return start;
  }
  if (!v.is_object()) throw JsonError("field \"start\" must be a string or an object");
  if (!v.contains("kind")) throw JsonError("missing field \"start.kind\"");
  const json& kind = v.at("kind");
  if (!kind.is_string()) throw JsonError("field \"start.kind\" must be a string");
  const std::string name = kind.get<std::string>();
  if (name == "random_sphere") {
    start.kind = StartKind::random_sphere;
  } else if (name == "perturbed_cayley") {
    start.kind = StartKind::perturbed_cayley;
  } else {
    throw JsonError("field \"start.kind\" must name random_sphere or perturbed_cayley");
  }
  for (const auto& item : v.items()) {
    const std::string& key = item.key();
    if (key == "kind") continue;
    if (key == "eps") {
      if (!item.value().is_number()) throw JsonError("field \"start.eps\" must be a number");
      start.eps = item.value().get<double>();
    } else if (key == "subspace") {
      start.subspace = subspace_from_json(item.value());
    } else {
      throw JsonError("unknown field \"start." + key + "\"");
    }
  }
  return start;
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string to_json(const Polyform& a) {
  std::string out = "{\"dim\":8,\"coeffs\":{";
  bool first = true;
  for (Blade b = 0; b < kBladeCount; ++b) {
    const double c = a[b];
    if (c == 0.0) continue;
    if (!first) out += ',';
    out += '"';
    out += blade_key(b);
    out += "\":";
    out += format_real(c);
    first = false;
  }
  out += "}}";
  return out;
}

Polyform polyform_from_json(const std::string& text) {
  const json j = parse_checked(text);
  if (!j.is_object()) throw JsonError("multivector document must be an object");
  if (!j.contains("dim")) throw JsonError("missing field \"dim\"");
  if (!j.at("dim").is_number_integer() || j.at("dim").get<int>() != 8)
    throw JsonError("field \"dim\" must be the integer 8");
  if (!j.contains("coeffs")) throw JsonError("missing field \"coeffs\"");
  const json& coeffs = j.at("coeffs");
  if (!coeffs.is_object()) throw JsonError("field \"coeffs\" must be an object");
  Polyform out;
  for (const auto& item : coeffs.items()) {
    if (!item.value().is_number())
      throw JsonError("coeffs value for key \"" + item.key() + "\" must be a number");
    out[blade_from_key(item.key())] = item.value().get<double>();
  }
  return out;
}

std::string to_json(const Metric8& h) {
  std::string out = "[";
  for (int i = 0; i < 8; ++i) {
    if (i) out += ',';
    out += '[';
    for (int k = 0; k < 8; ++k) {
      if (k) out += ',';
      out += format_real(h.entries()(i, k));
    }
    out += ']';
  }
  out += ']';
  return out;
}

Metric8 metric_from_json(const std::string& text) {
  const json j = parse_checked(text);
  if (j.is_string()) {
    if (j.get<std::string>() == "identity") return Metric8::identity();
    throw JsonError("metric string must be \"identity\"");
  }
  if (!j.is_array()) throw JsonError("metric document must be an array or \"identity\"");
  Matrix8 m;
  if (j.size() == 8 && j.at(0).is_array()) {
    for (size_t i = 0; i < 8; ++i) {
      const json& row = j.at(i);
      if (!row.is_array() || row.size() != 8)
        throw JsonError("metric row " + std::to_string(i) + " must hold 8 numbers");
      for (size_t k = 0; k < 8; ++k) {
        if (!row.at(k).is_number())
          throw JsonError("metric entry (" + std::to_string(i) + "," + std::to_string(k) +
                          ") must be a number");
        m(static_cast<int>(i), static_cast<int>(k)) = row.at(k).get<double>();
      }
    }
  } else if (j.size() == 64) {
    for (size_t i = 0; i < 64; ++i) {
      if (!j.at(i).is_number())
        throw JsonError("metric entry " + std::to_string(i) + " must be a number");
      m(static_cast<int>(i / 8), static_cast<int>(i % 8)) = j.at(i).get<double>();
    }
  } else {
    throw JsonError("metric must be an 8x8 nested array or a flat array of 64 numbers");
  }
  return Metric8(m);
}

std::string spinor_to_json(const Spinor16& xi) {
  return real_array(xi.data(), 16);
}

Spinor16 spinor_from_json(const std::string& text) {
  const json j = parse_checked(text);
  if (!j.is_array() || j.size() != 16)
    throw JsonError("spinor document must be an array of 16 numbers");
  Spinor16 xi;
  for (size_t i = 0; i < 16; ++i) {
    if (!j.at(i).is_number())
      throw JsonError("spinor entry " + std::to_string(i) + " must be a number");
    xi(static_cast<int>(i)) = j.at(i).get<double>();
  }
  return xi;
}

std::string to_json(const Spin7Verdict& v) {
  std::string out = "{";
  append_kv(out, "conformal", v.conformal ? "true" : "false", true);
  append_kv(out, "metric", v.metric ? "true" : "false");
  append_kv(out, "conformal_constant", format_real(v.conformal_constant));
  append_kv(out, "residual", format_real(v.residual));
  append_kv(out, "chirality_branch", std::to_string(v.chirality_branch));
  out += '}';
  return out;
}

std::string to_json(const SquareReport& r) {
  std::string out = "{";
  append_kv(out, "is_square", r.is_square ? "true" : "false", true);
  append_kv(out, "kappa", std::to_string(r.kappa));
  append_kv(out, "mu", std::to_string(r.mu));
  append_kv(out, "spinor_norm", format_real(r.spinor_norm));
  append_kv(out, "residuals", real_array(r.residuals.data(), r.residuals.size()));
  out += '}';
  return out;
}

std::string to_json(const FlowConfig& c) {
  std::string start = "{";
  if (c.start.kind == StartKind::random_sphere) {
    append_kv(start, "kind", "\"random_sphere\"", true);
  } else {
    append_kv(start, "kind", "\"perturbed_cayley\"", true);
    append_kv(start, "eps", format_real(c.start.eps));
    append_kv(start, "subspace", std::string("\"") + subspace_name(c.start.subspace) + "\"");
  }
  start += '}';

  std::string out = "{";
  append_kv(out, "seed", std::to_string(c.seed), true);
  append_kv(out, "max_iters", std::to_string(c.max_iters));
  append_kv(out, "step", format_real(c.step));
  append_kv(out, "step_rule", c.step_rule == StepRule::fixed ? "\"fixed\"" : "\"backtracking\"");
  append_kv(out, "grad_tol", format_real(c.grad_tol));
  append_kv(out, "start", start);
  append_kv(out, "restarts", std::to_string(c.restarts));
  out += '}';
  return out;
}

FlowConfig flow_config_from_json(const std::string& text) {
  const json j = parse_checked(text);
  if (!j.is_object()) throw JsonError("flow config must be an object");
  FlowConfig cfg;
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    const json& v = item.value();
    if (key == "seed") {
      if (!v.is_number_integer() || v.get<long long>() < 0)
        throw JsonError("field \"seed\" must be a nonnegative integer");
      cfg.seed = v.get<std::uint64_t>();
    } else if (key == "max_iters") {
      if (!v.is_number_integer() || v.get<long long>() < 0)
        throw JsonError("field \"max_iters\" must be a nonnegative integer");
      cfg.max_iters = v.get<int>();
    } else if (key == "step") {
      cfg.step = number_field(j, "step");
    } else if (key == "step_rule") {
      if (!v.is_string()) throw JsonError("field \"step_rule\" must be a string");
      const std::string name = v.get<std::string>();
      if (name == "fixed") {
        cfg.step_rule = StepRule::fixed;
      } else if (name == "backtracking") {
        cfg.step_rule = StepRule::backtracking;
      } else {
        throw JsonError("field \"step_rule\" must be \"fixed\" or \"backtracking\"");
      }
    } else if (key == "grad_tol") {
      cfg.grad_tol = number_field(j, "grad_tol");
    } else if (key == "start") {
      cfg.start = start_from_json(v);
    } else if (key == "restarts") {
      if (!v.is_number_integer() || v.get<long long>() < 1)
        throw JsonError("field \"restarts\" must be a positive integer");
      cfg.restarts = v.get<int>();
    } else {
      throw JsonError("unknown field \"" + key + "\" in flow config");
    }
  }
  return cfg;
}

const char* to_string(FlowClass c) {
  switch (c) {
    case FlowClass::spin7_cone: return "spin7_cone";
    case FlowClass::other_critical: return "other_critical";
    case FlowClass::not_converged: return "not_converged";
  }
  return "not_converged";
}

std::string to_json(const FlowReport& r) {
  std::string out = "{";
  append_kv(out, "final_form", to_json(r.final_form), true);
  append_kv(out, "iterations", std::to_string(r.iterations));
  append_kv(out, "final_grad_norm", format_real(r.final_grad_norm));
  append_kv(out, "final_W", format_real(r.final_w));
  append_kv(out, "verdict", to_json(r.verdict));
  append_kv(out, "hessian_spectrum", real_array(r.hessian_spectrum.data(), r.hessian_spectrum.size()));
  append_kv(out, "classification", std::string("\"") + to_string(r.classification) + "\"");
  append_kv(out, "trajectory_W",
            real_array(r.trajectory_w.data(), r.trajectory_w.size()));
  out += '}';
  return out;
}

std::string eigenvalue_json(const std::string& operator_name, const std::vector<double>& values) {
  std::string out = "{";
  append_kv(out, "operator", std::string("\"") + operator_name + "\"", true);
  append_kv(out, "eigenvalues", real_array(values.data(), values.size()));
  out += '}';
  return out;
}

}  // namespace spin7
