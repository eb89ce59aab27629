#pragma once

// JSON and CSV renderings of model data, axiom reports, certificates and search results. Exact values
// are written as strings next to their floating values; every JSON document carries a "schema" field.

#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>

#include <json.hpp>

#include "su2k/model/axioms.hpp"
#include "su2k/synth/search.hpp"
#include "su2k/universality/certificate.hpp"

namespace su2k::io {

using nlohmann::json;

inline constexpr const char* kModelSchema = "su2k.model/1";
inline constexpr const char* kVerifySchema = "su2k.verify/1";
inline constexpr const char* kCertificateSchema = "su2k.universality/1";
inline constexpr const char* kStatementsSchema = "su2k.statements/1";
inline constexpr const char* kSynthSchema = "su2k.synth/1";
inline constexpr const char* kProfileSchema = "su2k.profile/1";
inline constexpr const char* kMatrixSchema = "su2k.matrix/1";

/// Decimal rendering of a real at `bits` of precision.
template <class T>
std::string decimal(const T& x, int bits) {
  return dispatch_precision(bits, [&]<class Real>() {
    const int digits = bits <= 53 ? 17 : static_cast<int>(bits * 0.30103) + 2;
    return su2k::to_string(x.template approx<Real>().re, digits);
  });
}

/// {"exact": ..., "float": x or [re, im]}, plus "decimal" above double precision.
inline json value_json(const CycNumber& x, int bits = 53) {
  const ComplexD v = x.approx_double();
  json out{{"exact", x.to_string()}};
  if (x == x.conj()) {
    out["float"] = v.re;
    if (bits > 53) out["decimal"] = decimal(x, bits);
  } else {
    out["float"] = {v.re, v.im};
  }
  return out;
}

inline json value_json(const Surd& x, int bits = 53) {
  const ComplexD v = x.approx<double>();
  json out{{"exact", x.to_string()}};
  if (std::abs(v.im) < 1e-300) {
    out["float"] = v.re;
    if (bits > 53) out["decimal"] = decimal(x, bits);
  } else {
    out["float"] = {v.re, v.im};
  }
  return out;
}

inline json label_json(int twice_j) { return AnyonLabel{twice_j}.to_string(); }

inline json model_json(const ModelData& model, bool with_f = true, int bits = 53) {
  const int n = model.label_count();
  const Level& level = model.level();
  json out{{"schema", kModelSchema}, {"k", level.k()}};
  json labels = json::array(), fusion = json::array(), dims = json::array(), spins = json::array();
  for (int a = 0; a < n; ++a) {
    labels.push_back(label_json(a));
    dims.push_back(value_json(model.dim(a), bits));
    spins.push_back(value_json(model.spin(a), bits));
    json plane = json::array();
    for (int b = 0; b < n; ++b) {
      json row = json::array();
      for (int c = 0; c < n; ++c) row.push_back(model.fusion(a, b, c));
      plane.push_back(row);
    }
    fusion.push_back(plane);
  }
  json s = json::array();
  for (int a = 0; a < n; ++a) {
    json row = json::array();
    for (int b = 0; b < n; ++b) row.push_back(value_json(model.s_matrix()(static_cast<std::size_t>(a), static_cast<std::size_t>(b)), bits));
    s.push_back(row);
  }
  json r = json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!model.fusion(a, b, c)) continue;
        json e = value_json(model.r(a, b, c), bits);
        e["labels"] = {label_json(a), label_json(b), label_json(c)};
        r.push_back(e);
      }
  out["labels"] = labels;
  out["fusion"] = fusion;
  out["dims"] = dims;
  out["spins"] = spins;
  out["S"] = s;
  out["R"] = r;
  if (with_f) {
    json f = json::array();
    const FTable& table = model.f_table();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d) {
            const auto block = table.block(a, b, c, d);
            if (block.left.empty()) continue;
            for (std::size_t i = 0; i < block.right.size(); ++i)
              for (std::size_t j = 0; j < block.left.size(); ++j) {
                json e = value_json(block.matrix(i, j), bits);
                e["labels"] = {label_json(a), label_json(b), label_json(c), label_json(d)};
                e["j12"] = label_json(block.left[j]);
                e["j23"] = label_json(block.right[i]);
                f.push_back(e);
              }
          }
    out["F"] = f;
  }
  return out;
}

inline std::string model_text(const ModelData& model) {
  std::ostringstream os;
  const int n = model.label_count();
  os << "SU(2)_" << model.level().k() << ": " << n << " labels\n";
  for (int a = 0; a < n; ++a) {
    const ComplexD spin = model.spin(a).approx_double();
    os << "  j=" << AnyonLabel{a}.to_string() << "  dim=" << std::setprecision(12) << model.dim(a).approx_double().re << "  theta=" << spin
       << "\n";
  }
  os << "fusion:\n";
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      os << "  " << AnyonLabel{a}.to_string() << " x " << AnyonLabel{b}.to_string() << " =";
      bool first = true;
      for (int c = 0; c < n; ++c)
        if (model.fusion(a, b, c)) {
          os << (first ? " " : " + ") << AnyonLabel{c}.to_string();
          first = false;
        }
      os << "\n";
    }
  return os.str();
}

inline std::string model_csv(const ModelData& model) {
  std::ostringstream os;
  os << "label,twice_j,dim,spin_re,spin_im,dim_exact,spin_exact\n" << std::setprecision(17);
  for (int a = 0; a < model.label_count(); ++a) {
    const ComplexD spin = model.spin(a).approx_double();
    os << AnyonLabel{a}.to_string() << "," << a << "," << model.dim(a).approx_double().re << "," << spin.re << "," << spin.im << ",\""
       << model.dim(a).to_string() << "\",\"" << model.spin(a).to_string() << "\"\n";
  }
  return os.str();
}

inline json axiom_json(const AxiomReport& r) {
  json out{{"axiom", r.axiom}, {"k", r.k}, {"checked", r.checked}, {"exact", r.exact}, {"numeric", r.numeric},
           {"max_residual", r.max_residual}, {"holds", r.holds}};
  out["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
  return out;
}

inline std::string axiom_csv_header() { return "k,axiom,checked,exact,numeric,max_residual,holds\n"; }

inline std::string axiom_csv_row(const AxiomReport& r) {
  std::ostringstream os;
  os << std::setprecision(6) << r.k << "," << r.axiom << "," << r.checked << "," << r.exact << "," << r.numeric << "," << r.max_residual << ","
     << (r.holds ? "true" : "false") << "\n";
  return os.str();
}

inline std::string axiom_text(const AxiomReport& r) {
  std::ostringstream os;
  os << "k=" << r.k << " " << r.axiom << ": " << (r.holds ? "holds" : "FAILS") << " (" << r.checked << " equations, " << r.exact << " exact, "
     << r.numeric << " numeric, max residual " << std::setprecision(3) << r.max_residual << ")";
  if (r.counterexample) os << " first failure: " << *r.counterexample;
  return os.str() + "\n";
}

inline json order_json(const OrderDecision& d) {
  json out{{"finite", d.finite}, {"totient_bound", d.totient_bound}, {"max_candidate", d.max_candidate},
           {"candidates_examined", d.candidates_examined}};
  if (d.finite) {
    out["m"] = d.projective_order;
    out["angle"] = "2pi*" + std::to_string(d.angle_numerator) + "/" + std::to_string(d.angle_denominator);
  }
  return out;
}

inline json certificate_json(const Certificate& c, int bits = 53) {
  json out{{"k", c.k},
           {"trA", value_json(c.tr_a.exact, bits)},
           {"trB", value_json(c.tr_b.exact, bits)},
           {"trW", value_json(c.tr_w.exact, bits)},
           {"orderA", order_json(c.order_a)},
           {"orderB", order_json(c.order_b)},
           {"commutator_nontrivial", c.commutator_nontrivial},
           {"verdict", c.verdict()}};
  if (!c.dense) out["reason"] = c.reason;
  return out;
}

inline std::string certificate_csv_header() { return "k,cosThetaA,cosThetaB,orderA,orderB,trW,verdict\n"; }

inline std::string certificate_csv_row(const Certificate& c) {
  std::ostringstream os;
  auto order = [](const OrderDecision& d) { return d.finite ? std::to_string(d.projective_order) : std::string("inf"); };
  os << std::setprecision(17) << c.k << "," << c.tr_a.value / 2 << "," << c.tr_b.value / 2 << "," << order(c.order_a) << "," << order(c.order_b)
     << "," << c.tr_w.value << "," << c.verdict() << "\n";
  return os.str();
}

inline std::string certificate_text(const Certificate& c) {
  std::ostringstream os;
  os << std::setprecision(12) << "k=" << c.k << ": " << c.verdict();
  if (!c.dense) os << " (" << c.reason << ")";
  os << "\n  tr A = " << c.tr_a.value << "  A: " << c.order_a.to_string() << "\n  tr B = " << c.tr_b.value << "  B: " << c.order_b.to_string()
     << "\n  tr W = " << c.tr_w.value << "  commutator " << (c.commutator_nontrivial ? "nontrivial" : "trivial") << "\n";
  return os.str();
}

inline json statements_json(const StatementsReport& s) {
  auto q = [](const std::optional<mpq_class>& x) { return x ? json(x->get_str()) : json(nullptr); };
  json out{{"k", s.k}, {"cos2_rational", q(s.cos2)}, {"cos4_rational", q(s.cos4)}, {"cos_theta_rational", q(s.cos_theta)}};
  out["combination"] = s.combination ? json(s.combination->to_string(s.k)) : json(nullptr);
  return out;
}

inline json word_result_row(const DepthRow& r) {
  return {{"depth", r.depth}, {"explored", r.explored}, {"distinct", r.distinct}, {"best_error", r.best_error}, {"word", r.best_word.to_string()}};
}

inline json synth_json(const SearchConfig& config, const SynthResult& r) {
  json rows = json::array();
  for (const auto& row : r.rows) rows.push_back(word_result_row(row));
  return {{"schema", kSynthSchema}, {"k", config.k},          {"max_depth", config.max_depth}, {"beam_width", config.beam_width},
          {"delta", config.delta},  {"epsilon", config.epsilon}, {"explored", r.explored},      {"partial", r.partial},
          {"closed", r.closed},     {"rows", rows}};
}

inline std::string synth_csv(const SynthResult& r) {
  std::ostringstream os;
  os << "depth,explored,distinct,best_error,word\n" << std::setprecision(17);
  for (const auto& row : r.rows)
    os << row.depth << "," << row.explored << "," << row.distinct << "," << row.best_error << ",\"" << row.best_word.to_string() << "\"\n";
  return os.str();
}

inline std::string synth_text(const SearchConfig& config, const SynthResult& r) {
  std::ostringstream os;
  os << "k=" << config.k << " synthesis" << (r.partial ? " (partial: state cap reached)" : "") << (r.closed ? " (closed)" : "") << "\n";
  for (const auto& row : r.rows)
    os << "  depth " << std::setw(2) << row.depth << "  distinct " << std::setw(9) << row.distinct << "  error " << std::setprecision(6)
       << std::scientific << row.best_error << std::defaultfloat << "  " << (row.best_word.empty() ? "(identity)" : row.best_word.to_string())
       << "\n";
  return os.str();
}

inline json profile_json(const SearchConfig& config, const ErrorProfile& p) {
  json rows = json::array();
  for (const auto& r : p.rows)
    rows.push_back({{"depth", r.depth}, {"explored", r.explored}, {"distinct", r.distinct}, {"best_error", r.min_error},
                    {"mean_error", r.mean_error}, {"max_error", r.max_error}});
  return {{"schema", kProfileSchema}, {"k", p.k},         {"samples", p.samples}, {"seed", p.seed}, {"beam_width", config.beam_width},
          {"delta", config.delta},    {"partial", p.partial}, {"closed", p.closed},   {"rows", rows}};
}

/// best_error is the smallest best error over the sampled targets.
inline std::string profile_csv(const ErrorProfile& p) {
  std::ostringstream os;
  os << "depth,explored,distinct,best_error,mean_error,max_error\n" << std::setprecision(17);
  for (const auto& r : p.rows)
    os << r.depth << "," << r.explored << "," << r.distinct << "," << r.min_error << "," << r.mean_error << "," << r.max_error << "\n";
  return os.str();
}

inline json matrix_json(const CMatrixD& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back({m(r, c).re, m(r, c).im});
    entries.push_back(row);
  }
  return {{"schema", kMatrixSchema}, {"dim", m.dim()}, {"entries", entries}};
}

inline json matrix_json(const SurdMatrix& m) {
  json out = matrix_json(approx_matrix<double>(m));
  json exact = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(r, c).to_string());
    exact.push_back(row);
  }
  out["exact"] = exact;
  return out;
}

/// Square matrix from {"entries": [[[re, im], ...], ...]} (rows of complex pairs) or from a flat
/// row-major list of pairs with "dim".
inline CMatrixD matrix_from_json(const json& j) {
  try {
    const json& e = j.at("entries");
    if (!e.is_array() || e.empty()) throw DomainError("matrix entries must be a nonempty array");
    auto complex_of = [](const json& z) {
      if (z.is_number()) return ComplexD(z.get<double>());
      if (!z.is_array() || z.size() != 2) throw DomainError("matrix entry must be [re, im]");
      return ComplexD(z[0].get<double>(), z[1].get<double>());
    };
    if (e[0].is_array() && !e[0].empty() && e[0][0].is_array()) {
      const std::size_t n = e.size();
      CMatrixD m(n);
      for (std::size_t r = 0; r < n; ++r) {
        if (e[r].size() != n) throw DomainError("matrix is not square");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = complex_of(e[r][c]);
      }
      return m;
    }
    const std::size_t n = j.contains("dim") ? j.at("dim").get<std::size_t>() : static_cast<std::size_t>(std::lround(std::sqrt(e.size())));
    if (n * n != e.size()) throw DomainError("flat entry list does not have dim^2 entries");
    CMatrixD m(n);
    for (std::size_t i = 0; i < e.size(); ++i) m(i / n, i % n) = complex_of(e[i]);
    return m;
  } catch (const json::exception& ex) {
    throw DomainError(std::string("malformed matrix JSON: ") + ex.what());
  }
}

inline CMatrixD read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open target file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& ex) {
    throw DomainError("target file '" + path + "' is not valid JSON: " + ex.what());
  }
  return matrix_from_json(j);
}

}  // namespace su2k::io
