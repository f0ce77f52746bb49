#ifndef MOMENTLAB_SERIALIZE_HPP
#define MOMENTLAB_SERIALIZE_HPP

#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "momentlab/lie_algebra.hpp"
#include "momentlab/unitary_rep.hpp"

namespace momentlab {

using json = nlohmann::ordered_json;

/// Floating-point values are printed with 17 significant digits so that
/// output round-trips to the same double.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace detail {

inline void escape_string(const std::string& s, std::ostream& os) {
  os << '"';
  for (const char ch : s) {
    switch (ch) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      case '\r': os << "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
          os << buf;
        } else {
          os << ch;
        }
    }
  }
  os << '"';
}

}  // namespace detail

/// Deterministic JSON emitter: preserves insertion order, prints floats with
/// %.17g. Used for all report output (nlohmann's own dump prints
/// shortest-round-trip floats instead).
inline void dump_json(const json& j, std::ostream& os, int indent = 0, int depth = 0) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string closing_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{' << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad;
        detail::escape_string(it.key(), os);
        os << (indent > 0 ? ": " : ":");
        dump_json(it.value(), os, indent, depth + 1);
      }
      os << nl << closing_pad << '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << '[' << nl;
      bool first = true;
      for (const auto& item : j) {
        if (!first) os << ',' << nl;
        first = false;
        os << pad;
        dump_json(item, os, indent, depth + 1);
      }
      os << nl << closing_pad << ']';
      return;
    }
    case json::value_t::string:
      detail::escape_string(j.get<std::string>(), os);
      return;
    case json::value_t::boolean:
      os << (j.get<bool>() ? "true" : "false");
      return;
    case json::value_t::number_integer:
      os << j.get<std::int64_t>();
      return;
    case json::value_t::number_unsigned:
      os << j.get<std::uint64_t>();
      return;
    case json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << "null";
      return;
  }
}

inline std::string dump_json(const json& j, int indent = 0) {
  std::ostringstream os;
  dump_json(j, os, indent);
  return os.str();
}

// ---------------------------------------------------------------------------
// Domain types <-> JSON

template <typename Scalar>
json to_json(const LieAlgebra<Scalar>& alg) {
  json c = json::array();
  for (Index i = 0; i < alg.dim(); ++i) {
    json ci = json::array();
    for (Index j = 0; j < alg.dim(); ++j) {
      json cij = json::array();
      for (Index k = 0; k < alg.dim(); ++k) cij.push_back(static_cast<double>(alg.c(i, j, k)));
      ci.push_back(std::move(cij));
    }
    c.push_back(std::move(ci));
  }
  return json{{"dim", alg.dim()}, {"labels", alg.labels()}, {"c", std::move(c)}};
}

/// Re-validates antisymmetry and the Jacobi identity (the constructor does).
template <typename Scalar>
LieAlgebra<Scalar> lie_algebra_from_json(const json& j) {
  detail::require(j.contains("dim") && j.contains("c"), "LieAlgebra JSON: need dim and c");
  const Index n = j.at("dim").get<Index>();
  detail::require(n >= 1, "LieAlgebra JSON: dim must be positive");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = j.at("labels").get<std::vector<std::string>>();
  else
    for (Index i = 0; i < n; ++i) labels.push_back("X" + std::to_string(i + 1));
  detail::require(static_cast<Index>(labels.size()) == n,
                  "LieAlgebra JSON: one label per basis element");
  const json& c = j.at("c");
  detail::require(c.is_array() && static_cast<Index>(c.size()) == n,
                  "LieAlgebra JSON: c must be a dim^3 nested array");
  std::vector<Scalar> flat;
  flat.reserve(static_cast<std::size_t>(n * n * n));
  for (Index i = 0; i < n; ++i) {
    detail::require(c[i].is_array() && static_cast<Index>(c[i].size()) == n,
                    "LieAlgebra JSON: c must be a dim^3 nested array");
    for (Index jj = 0; jj < n; ++jj) {
      detail::require(c[i][jj].is_array() && static_cast<Index>(c[i][jj].size()) == n,
                      "LieAlgebra JSON: c must be a dim^3 nested array");
      for (Index k = 0; k < n; ++k) flat.push_back(static_cast<Scalar>(c[i][jj][k].get<double>()));
    }
  }
  return LieAlgebra<Scalar>(std::move(labels), std::move(flat));
}

template <typename Scalar>
json to_json(const VectorXc<Scalar>& state) {
  json re = json::array(), im = json::array();
  for (Index k = 0; k < state.size(); ++k) {
    re.push_back(static_cast<double>(state(k).real()));
    im.push_back(static_cast<double>(state(k).imag()));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

template <typename Scalar>
VectorXc<Scalar> state_from_json(const json& j) {
  detail::require(j.contains("re") && j.contains("im"), "StateVector JSON: need re and im");
  const auto re = j.at("re").get<std::vector<double>>();
  const auto im = j.at("im").get<std::vector<double>>();
  detail::require(re.size() == im.size(), "StateVector JSON: re and im lengths differ");
  VectorXc<Scalar> v(static_cast<Index>(re.size()));
  for (Index k = 0; k < v.size(); ++k)
    v(k) = std::complex<Scalar>(static_cast<Scalar>(re[static_cast<std::size_t>(k)]),
                                static_cast<Scalar>(im[static_cast<std::size_t>(k)]));
  return v;
}

template <typename Scalar>
json real_vector_to_json(const VectorX<Scalar>& v) {
  json out = json::array();
  for (Index k = 0; k < v.size(); ++k) out.push_back(static_cast<double>(v(k)));
  return out;
}

template <typename Scalar>
VectorX<Scalar> real_vector_from_json(const json& j) {
  const auto vals = j.get<std::vector<double>>();
  VectorX<Scalar> v(static_cast<Index>(vals.size()));
  for (Index k = 0; k < v.size(); ++k) v(k) = static_cast<Scalar>(vals[static_cast<std::size_t>(k)]);
  return v;
}

template <typename Scalar>
json complex_matrix_to_json(const MatrixXc<Scalar>& m) {
  json re = json::array(), im = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json rrow = json::array(), irow = json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      rrow.push_back(static_cast<double>(m(r, c).real()));
      irow.push_back(static_cast<double>(m(r, c).imag()));
    }
    re.push_back(std::move(rrow));
    im.push_back(std::move(irow));
  }
  return json{{"re", std::move(re)}, {"im", std::move(im)}};
}

template <typename Scalar>
MatrixXc<Scalar> complex_matrix_from_json(const json& j) {
  detail::require(j.contains("re") && j.contains("im"), "matrix JSON: need re and im");
  const auto re = j.at("re").get<std::vector<std::vector<double>>>();
  const auto im = j.at("im").get<std::vector<std::vector<double>>>();
  detail::require(!re.empty() && re.size() == im.size(), "matrix JSON: re/im shape mismatch");
  const Index rows = static_cast<Index>(re.size());
  const Index cols = static_cast<Index>(re.front().size());
  MatrixXc<Scalar> m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    detail::require(static_cast<Index>(re[static_cast<std::size_t>(r)].size()) == cols &&
                        static_cast<Index>(im[static_cast<std::size_t>(r)].size()) == cols,
                    "matrix JSON: ragged rows");
    for (Index c = 0; c < cols; ++c)
      m(r, c) = std::complex<Scalar>(
          static_cast<Scalar>(re[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]),
          static_cast<Scalar>(im[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]));
  }
  return m;
}

template <typename Scalar>
json to_json(const UnitaryRep<Scalar>& rep) {
  json gens = json::array();
  for (const auto& g : rep.generators()) gens.push_back(complex_matrix_to_json<Scalar>(g));
  return json{{"algebra", to_json(rep.algebra())}, {"dim", rep.dim()}, {"generators", std::move(gens)}};
}

/// Loads a representation; with validate = false the invariants are not
/// enforced, so verify_rep can report on defective inputs.
template <typename Scalar>
UnitaryRep<Scalar> rep_from_json(const json& j, bool validate = true) {
  detail::require(j.contains("algebra") && j.contains("generators"),
                  "UnitaryRep JSON: need algebra and generators");
  LieAlgebra<Scalar> alg = lie_algebra_from_json<Scalar>(j.at("algebra"));
  std::vector<MatrixXc<Scalar>> gens;
  for (const auto& g : j.at("generators")) gens.push_back(complex_matrix_from_json<Scalar>(g));
  if (j.contains("dim") && !gens.empty())
    detail::require(j.at("dim").get<Index>() == gens.front().rows(),
                    "UnitaryRep JSON: dim does not match generators");
  if (validate) return UnitaryRep<Scalar>(std::move(alg), std::move(gens));
  return UnitaryRep<Scalar>(std::move(alg), std::move(gens), unchecked);
}

template <typename Scalar>
json to_json(const RepReport<Scalar>& report) {
  json skew = json::array();
  for (const auto d : report.skew_defects) skew.push_back(static_cast<double>(d));
  json hom = json::array();
  for (Index i = 0; i < report.homomorphism_defects.rows(); ++i)
    for (Index j = 0; j < report.homomorphism_defects.cols(); ++j)
      hom.push_back(json{{"i", i}, {"j", j},
                         {"defect", static_cast<double>(report.homomorphism_defects(i, j))}});
  return json{{"check", "verify_rep"},
              {"skew_defects", std::move(skew)},
              {"homomorphism_defects", std::move(hom)},
              {"max_skew", static_cast<double>(report.max_skew)},
              {"max_homomorphism", static_cast<double>(report.max_homomorphism)},
              {"skew_tolerance", static_cast<double>(report.skew_tolerance)},
              {"homomorphism_tolerance", static_cast<double>(report.homomorphism_tolerance)},
              {"worst_skew_index", report.worst_skew_index},
              {"pass", report.pass}};
}

}  // namespace momentlab

#endif
