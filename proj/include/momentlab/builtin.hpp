#ifndef MOMENTLAB_BUILTIN_HPP
#define MOMENTLAB_BUILTIN_HPP

#include <string>

#include "momentlab/serialize.hpp"
#include "momentlab/unitary_rep.hpp"

namespace momentlab {

// Builtin representation grammar:
//   su2:spin=<half-integer>
//   torus:dim=<n>,weights=[[w11,...,w1n],...]
//   sum(<a>,<b>)
//   tensor(<a>,<b>)

namespace detail {

inline std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

/// Splits "a,b" at the single top-level comma (outside (), []).
inline std::pair<std::string, std::string> split_pair(const std::string& s, const std::string& who) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == ',' && depth == 0) return {s.substr(0, i), s.substr(i + 1)};
  }
  throw std::invalid_argument(who + ": expected two comma-separated representations");
}

}  // namespace detail

inline bool is_builtin_spec(const std::string& name) {
  const std::string s = detail::strip(name);
  return s.rfind("su2:", 0) == 0 || s.rfind("torus:", 0) == 0 || s.rfind("sum(", 0) == 0 ||
         s.rfind("tensor(", 0) == 0;
}

template <typename Scalar>
UnitaryRep<Scalar> parse_builtin_rep(const std::string& name) {
  const std::string s = detail::strip(name);
  if (s.rfind("su2:spin=", 0) == 0) {
    const std::string value = s.substr(9);
    std::size_t used = 0;
    double spin = 0;
    try {
      spin = std::stod(value, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("builtin rep: cannot parse spin in '" + name + "'");
    }
    detail::require(used == value.size(), "builtin rep: trailing characters in '" + name + "'");
    return su2_spin<Scalar>(static_cast<Scalar>(spin));
  }
  if (s.rfind("torus:dim=", 0) == 0) {
    const std::size_t comma = s.find(",weights=");
    detail::require(comma != std::string::npos,
                    "builtin rep: torus needs ',weights=[[...]]' in '" + name + "'");
    Index dim = 0;
    try {
      dim = static_cast<Index>(std::stoll(s.substr(10, comma - 10)));
    } catch (const std::exception&) {
      throw std::invalid_argument("builtin rep: cannot parse torus dim in '" + name + "'");
    }
    json weights_json;
    try {
      weights_json = json::parse(s.substr(comma + 9));
    } catch (const std::exception&) {
      throw std::invalid_argument("builtin rep: cannot parse torus weights in '" + name + "'");
    }
    detail::require(weights_json.is_array() && !weights_json.empty(),
                    "builtin rep: torus weights must be a nonempty array of arrays");
    MatrixX<Scalar> weights(static_cast<Index>(weights_json.size()), dim);
    for (Index r = 0; r < weights.rows(); ++r) {
      const json& row = weights_json[static_cast<std::size_t>(r)];
      detail::require(row.is_array() && static_cast<Index>(row.size()) == dim,
                      "builtin rep: each torus weight needs dim entries");
      for (Index c = 0; c < dim; ++c)
        weights(r, c) = static_cast<Scalar>(row[static_cast<std::size_t>(c)].get<double>());
    }
    return torus_rep<Scalar>(dim, weights);
  }
  if (s.rfind("sum(", 0) == 0 && s.back() == ')') {
    const auto [a, b] = detail::split_pair(s.substr(4, s.size() - 5), "sum");
    return direct_sum(parse_builtin_rep<Scalar>(a), parse_builtin_rep<Scalar>(b));
  }
  if (s.rfind("tensor(", 0) == 0 && s.back() == ')') {
    const auto [a, b] = detail::split_pair(s.substr(7, s.size() - 8), "tensor");
    return tensor_product(parse_builtin_rep<Scalar>(a), parse_builtin_rep<Scalar>(b));
  }
  throw std::invalid_argument("unknown builtin representation '" + name + "'");
}

}  // namespace momentlab

#endif
