#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "bracelab/brace.hpp"
#include "bracelab/series.hpp"
#include "bracelab/solution.hpp"
#include "bracelab/substructure.hpp"

namespace bracelab {

/// One line of CLI output: key, pre-rendered text value, JSON value.
struct ReportField {
  std::string key;
  std::string text;
  nlohmann::ordered_json value;
};

using Report = std::vector<ReportField>;

inline std::string render_text(const Report& report) {
  std::string out;
  for (const ReportField& f : report) {
    out += f.key;
    out += ": ";
    out += f.text;
    out += '\n';
  }
  return out;
}

inline std::string render_json(const Report& report) {
  nlohmann::ordered_json obj;
  for (const ReportField& f : report) obj[f.key] = f.value;
  return obj.dump(2) + "\n";
}

namespace detail {

inline nlohmann::ordered_json set_json(const ElemSet& s) {
  return nlohmann::ordered_json(s.members());
}

inline std::string series_text(const SeriesChain& chain) {
  std::string out;
  for (size_t i = 0; i < chain.terms.size(); ++i) {
    if (i) out += ' ';
    out += chain.terms[i].to_string();
  }
  return out;
}

inline nlohmann::ordered_json series_json(const SeriesChain& chain) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ElemSet& t : chain.terms) arr.push_back(t.members());
  return arr;
}

inline std::string sizes_text(const std::vector<int>& sizes) {
  std::string out;
  for (size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(sizes[i]);
  }
  return out;
}

inline void put_bool(Report& r, const std::string& key, bool v) {
  r.push_back({key, v ? "true" : "false", v});
}

inline void put_level(Report& r, const std::string& key, std::optional<int> v) {
  if (v)
    r.push_back({key, std::to_string(*v), *v});
  else
    r.push_back({key, "none", nullptr});
}

}  // namespace detail

/// Full structural report for a brace; field order is part of the output
/// contract and must stay stable.
inline Report analyze_brace(const FiniteBrace& a, const std::string& name,
                            int subbrace_cap = kDefaultSubbraceCap) {
  Report r;
  r.push_back({"name", name.empty() ? "(unnamed)" : name,
               name.empty() ? nlohmann::ordered_json(nullptr)
                            : nlohmann::ordered_json(name)});
  r.push_back({"order", std::to_string(a.order()), a.order()});
  detail::put_bool(r, "abelian", is_abelian(a));

  DedekindReport dd = is_dedekind(a, subbrace_cap);
  detail::put_bool(r, "dedekind", dd.is_dedekind);
  if (!dd.is_dedekind) {
    r.push_back({"dedekind-witness", dd.witness->members.to_string(),
                 detail::set_json(dd.witness->members)});
    r.push_back({"dedekind-witness-star", dd.star_witness->to_string(),
                 dd.star_witness->to_string()});
  }

  ElemSet soc = socle(a);
  ElemSet cen = centre(a);
  r.push_back({"socle", soc.to_string(), detail::set_json(soc)});
  r.push_back({"centre", cen.to_string(), detail::set_json(cen)});

  SeriesChain soc_chain = socle_series(a);
  r.push_back({"socle-series", detail::series_text(soc_chain),
               detail::series_json(soc_chain)});

  NilpotencyReport np = nilpotency_report(a);
  detail::put_level(r, "multipermutation-level", np.multipermutation_level);

  SeriesChain ls = left_series(a);
  r.push_back({"left-series", detail::series_text(ls), detail::series_json(ls)});
  detail::put_bool(r, "left-nilpotent", np.left_nilpotent);
  if (np.left_nilpotent)
    r.push_back({"left-class", std::to_string(np.left_class), np.left_class});

  SeriesChain rs = right_series(a);
  r.push_back({"right-series", detail::series_text(rs), detail::series_json(rs)});
  detail::put_bool(r, "right-nilpotent", np.right_nilpotent);
  if (np.right_nilpotent)
    r.push_back({"right-class", std::to_string(np.right_class), np.right_class});

  detail::put_bool(r, "centrally-nilpotent", np.centrally_nilpotent);
  detail::put_bool(r, "right-nil-2", is_m_right_nil(a, 2));
  detail::put_bool(r, "left-nil-2", is_m_left_nil(a, 2));
  detail::put_bool(r, "right-nil-3", is_m_right_nil(a, 3));
  detail::put_bool(r, "left-nil-3", is_m_left_nil(a, 3));

  Solution s = associated_solution(a);
  detail::put_bool(r, "solution-twist", is_twist(s));
  detail::put_bool(r, "solution-diagonal-fixed", has_diagonal_fixed_points(s));
  std::vector<int> sizes = retraction_sizes(s);
  r.push_back({"retraction-sizes", detail::sizes_text(sizes), sizes});
  detail::put_level(r, "solution-level", multipermutation_level_solution(s));
  return r;
}

/// Report for a standalone solution.
inline Report analyze_solution(const Solution& s) {
  Report r;
  r.push_back({"size", std::to_string(s.size), s.size});
  detail::put_bool(r, "twist", is_twist(s));
  detail::put_bool(r, "diagonal-fixed", has_diagonal_fixed_points(s));
  std::vector<int> sizes = retraction_sizes(s);
  r.push_back({"retraction-sizes", detail::sizes_text(sizes), sizes});
  detail::put_level(r, "multipermutation-level", multipermutation_level_solution(s));
  return r;
}

}  // namespace bracelab
