#pragma once

// Data behind the three figures: image-order proportions for End(C_n), the
// centre-in-kernel probability, and log10 |Hom(I_2(p), C_n)|.

#include "reflendo/counting.hpp"
#include "reflendo/stats.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace reflendo {

inline constexpr const char* kLibraryVersion = "1.0.0";

/// Largest rank any figure sweep accepts.
inline constexpr unsigned kSweepLimit = 200;

struct FigureDataset {
  std::string figure;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  nlohmann::ordered_json metadata;
};

namespace detail {

inline void check_range(unsigned lo, unsigned hi, unsigned min_lo, const char* what) {
  if (lo < min_lo || lo > hi) throw std::out_of_range(std::string(what) + ": bad range");
  if (hi > kSweepLimit) throw std::out_of_range(std::string(what) + ": exceeds sweep limit " + std::to_string(kSweepLimit));
}

inline nlohmann::ordered_json base_metadata(const char* figure) {
  nlohmann::ordered_json m;
  m["figure"] = figure;
  m["library_version"] = kLibraryVersion;
  return m;
}

inline std::string fixed_double(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace detail

/// Per n: every image order of End(C_n) with its exact proportion.
inline FigureDataset fig1(unsigned n_lo = 3, unsigned n_hi = 25) {
  detail::check_range(n_lo, n_hi, 2, "fig1");
  FigureDataset d{"fig1",
                  {"n", "image_order", "count", "proportion_num", "proportion_den", "proportion_float"},
                  {},
                  detail::base_metadata("fig1")};
  d.metadata["n_min"] = n_lo;
  d.metadata["n_max"] = n_hi;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    const auto dist = image_order_distribution(GroupId::C(n));
    for (std::size_t i = 0; i < dist.support.size(); ++i) {
      const Ratio q = dist.mass(i);
      d.rows.push_back({std::to_string(n), dist.support[i].first.str(), dist.support[i].second.str(),
                        numerator_of(q).str(), denominator_of(q).str(), to_fixed(q, 12)});
    }
  }
  return d;
}

/// P[z_0 in ker phi] for C_n.
inline FigureDataset fig2(unsigned n_lo = 4, unsigned n_hi = 25) {
  detail::check_range(n_lo, n_hi, 2, "fig2");
  FigureDataset d{"fig2", {"n", "num", "den", "prob_float"}, {}, detail::base_metadata("fig2")};
  d.metadata["n_min"] = n_lo;
  d.metadata["n_max"] = n_hi;
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    const Ratio q = prob_centre_in_kernel(GroupId::C(n));
    d.rows.push_back({std::to_string(n), numerator_of(q).str(), denominator_of(q).str(), to_fixed(q, 5)});
  }
  return d;
}

/// |Hom(I_2(p), C_n)| for odd primes p <= p_max.
inline FigureDataset fig3(unsigned p_max = 61, unsigned n_lo = 3, unsigned n_hi = 50) {
  detail::check_range(n_lo, n_hi, 2, "fig3");
  if (p_max < 3 || p_max > 10 * kSweepLimit) throw std::out_of_range("fig3: p_max out of range");
  FigureDataset d{"fig3", {"p", "n", "count", "log10_count"}, {}, detail::base_metadata("fig3")};
  d.metadata["p_max"] = p_max;
  d.metadata["n_min"] = n_lo;
  d.metadata["n_max"] = n_hi;
  for (unsigned p = 3; p <= p_max; p += 2) {
    if (!is_odd_prime(p)) continue;
    for (unsigned n = n_lo; n <= n_hi; ++n) {
      const CountInt c = hom_count_I2p(p, GroupId::C(n));
      d.rows.push_back({std::to_string(p), std::to_string(n), c.str(), detail::fixed_double(std::log10(to_double(c)), 6)});
    }
  }
  return d;
}

inline void write_csv(std::ostream& os, const FigureDataset& d) {
  for (std::size_t i = 0; i < d.columns.size(); ++i) os << (i ? "," : "") << d.columns[i];
  os << "\n";
  for (const auto& row : d.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << "\n";
  }
  os << "# metadata=" << d.metadata.dump() << "\n";
}

inline std::string to_csv(const FigureDataset& d) {
  std::ostringstream os;
  write_csv(os, d);
  return os.str();
}

inline nlohmann::ordered_json to_json(const FigureDataset& d) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : d.rows) {
    nlohmann::ordered_json r;
    for (std::size_t i = 0; i < row.size(); ++i) r[d.columns[i]] = row[i];
    rows.push_back(std::move(r));
  }
  nlohmann::ordered_json out;
  out["metadata"] = d.metadata;
  out["columns"] = d.columns;
  out["rows"] = std::move(rows);
  return out;
}

}  // namespace reflendo
