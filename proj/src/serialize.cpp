#include "kahler/serialize.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>

namespace kahler {

namespace {

const char* kind_name(DomainKind k) {
  switch (k) {
    case DomainKind::TypeI: return "type1";
    case DomainKind::TypeII: return "type2";
    case DomainKind::TypeIII: return "type3";
    case DomainKind::TypeIV: return "type4";
    case DomainKind::ExcV: return "exc5";
    case DomainKind::ExcVI: return "exc6";
  }
  return "?";
}

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

json complex_pair(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_pair(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

int int_field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_number_integer()) {
    throw std::invalid_argument(std::string("domain spec: integer field '") + key + "' required");
  }
  return it->get<int>();
}

json bigints(const std::vector<BigInt>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

}  // namespace

json to_json(const DomainSpec& spec) {
  json j;
  j["kind"] = kind_name(spec.kind());
  if (spec.kind() == DomainKind::TypeI) j["m"] = spec.m();
  if (spec.classical()) j["n"] = spec.n();
  return j;
}

DomainSpec domain_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("domain spec: expected a JSON object");
  const auto kind_it = j.find("kind");
  if (kind_it == j.end() || !kind_it->is_string()) throw std::invalid_argument("domain spec: string field 'kind' required");
  const std::string kind = kind_it->get<std::string>();
  std::set<std::string> allowed{"kind"};
  DomainSpec spec = DomainSpec::exc5();
  if (kind == "type1") {
    allowed.insert({"m", "n"});
    spec = DomainSpec::type1(int_field(j, "m"), int_field(j, "n"));
  } else if (kind == "type2" || kind == "type3" || kind == "type4") {
    allowed.insert("n");
    const int n = int_field(j, "n");
    spec = kind == "type2" ? DomainSpec::type2(n) : kind == "type3" ? DomainSpec::type3(n) : DomainSpec::type4(n);
  } else if (kind == "exc6") {
    spec = DomainSpec::exc6();
  } else if (kind != "exc5") {
    throw std::invalid_argument("domain spec: unknown kind '" + kind + "'");
  }
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) throw std::invalid_argument("domain spec: unexpected field '" + item.key() + "'");
  }
  return spec;
}

json to_json(const CurvatureReport& r, bool tensors) {
  json j;
  j["dimension"] = r.metric.dimension;
  j["k"] = number(r.k);
  j["norm_R_sq"] = number(r.norm_R_sq);
  j["norm_Ric_sq"] = number(r.norm_Ric_sq);
  j["lap_k"] = number(r.lap_k);
  j["a0"] = number(r.a0);
  j["a1"] = number(r.a1);
  j["a2"] = number(r.a2);
  j["has_laplacian"] = r.has_laplacian;
  j["max_imag_residue"] = number(r.max_imag_residue);
  if (tensors) {
    j["g"] = matrix_json(r.metric.g);
    j["g_inv"] = matrix_json(r.metric.g_inv);
    j["ric"] = matrix_json(r.ric);
    json flat = json::array();
    for (const auto& z : r.R.data()) flat.push_back(complex_pair(z));
    j["R"] = std::move(flat);
  }
  return j;
}

json to_json(const IntPolynomial& p) {
  return {{"text", p.to_string()}, {"coefficients_low_to_high", bigints(p.coefficients())}};
}

json to_json(const CaseVerdict& v) {
  json j;
  j["case_id"] = v.case_id;
  j["family"] = v.family;
  if (v.case_id <= 4) {
    j["n_min"] = v.n_min;
    j["n_max"] = v.n_max;
  }
  json survivors = json::array();
  for (const auto& s : v.survivors) {
    survivors.push_back({{"m", s.m}, {"n", s.n}, {"d", s.d}, {"gamma", s.gamma}, {"mu", to_string(s.mu)}});
  }
  j["survivors"] = std::move(survivors);
  json evidence = json::object();
  if (v.case1) {
    evidence["pairs_checked"] = v.case1->pairs_checked;
    evidence["equality_iff_m_or_n_is_one"] = v.case1->identity_holds;
  }
  if (!v.certificates.empty()) {
    json certs = json::array();
    for (const auto& c : v.certificates) {
      json factors = json::array();
      for (const auto& f : c.factors) factors.push_back(f.to_string());
      certs.push_back({{"closed_form", c.closed_form},
                       {"polynomial", to_json(c.polynomial)},
                       {"factors", std::move(factors)},
                       {"expansion_matches", c.expansion_matches},
                       {"integer_roots", bigints(c.integer_roots)},
                       {"admissible_roots", bigints(c.admissible_roots)},
                       {"values_checked", c.values_checked},
                       {"scan_zeros", c.scan_zeros},
                       {"consistent_with_closed_form", c.consistent_with_closed_form}});
    }
    evidence["certificates"] = std::move(certs);
  }
  if (v.witness) {
    evidence["numerator"] = v.witness->numerator.get_str();
    evidence["denominator"] = v.witness->denominator.get_str();
    evidence["value"] = to_string(v.witness->value);
    evidence["remainder"] = v.witness->remainder.get_str();
    evidence["is_integer"] = v.witness->is_integer;
  }
  j["evidence"] = std::move(evidence);
  j["matches_expected"] = v.matches_expected;
  j["conclusion"] = v.conclusion;
  return j;
}

json to_json(const Classification& c) {
  json cases = json::array();
  for (const auto& v : c.cases) cases.push_back(to_json(v));
  return {{"cases", std::move(cases)}, {"theorem_holds", c.theorem_holds}, {"final_verdict", c.final_verdict}};
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") == std::string::npos) {
      out += f;
      continue;
    }
    out += '"';
    for (char ch : f) {
      if (ch == '"') out += '"';
      out += ch;
    }
    out += '"';
  }
  out += '\n';
  return out;
}

}  // namespace kahler
