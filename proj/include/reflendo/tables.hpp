#pragma once

// Endomorphism and homomorphism tables assembled from the counting module,
// with CSV (RFC 4180) and JSON rendering.

#include "reflendo/counting.hpp"
#include "reflendo/table_row.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace reflendo {

struct HomTable {
  std::string source;  // group spec, e.g. "I2:3"
  GroupId target;
  std::vector<EndoTableRow> rows;
  CountInt total;

  bool operator==(const HomTable&) const = default;
};

inline CountInt sum_e(const std::vector<EndoTableRow>& rows) {
  CountInt total = 0;
  for (const auto& r : rows) total += r.e;
  return total;
}

/// Where a table's rows come from, for reports.
inline std::string table_provenance(const GroupId& id) {
  if (uses_constant_table(id)) return "constant table " + to_spec(id);
  if (id.family() == Family::C && id.param() == 2) return "closed form via I2:4";
  return "closed form";
}

namespace detail {

inline EndoTableRow make_row(std::string kernel, CountInt index, std::string quotient, CountInt z,
                             std::optional<CountInt> aut) {
  CountInt e = aut ? CountInt(z * *aut) : CountInt(0);
  return {std::move(kernel), std::move(index), std::move(quotient), std::move(z), std::move(aut), std::move(e)};
}

inline std::vector<EndoTableRow> rows_I2(unsigned m) {
  const std::string self = "I_2(" + std::to_string(m) + ")";
  std::vector<EndoTableRow> rows{make_row(self, 1, "{1}", 1, CountInt(1))};
  const bool even = m % 2 == 0;
  if (even) {
    rows.push_back(make_row("⟨r^2,s⟩", 2, "I_2(1)", m + 1, CountInt(1)));
    rows.push_back(make_row("⟨r^2,rs⟩", 2, "I_2(1)", m + 1, CountInt(1)));
  }
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    std::string kernel = d == m ? "{1}" : d == 1 ? "⟨r⟩" : "⟨r^" + std::to_string(d) + "⟩";
    const CountInt z = (even && d == 1) ? CountInt(m + 1) : CountInt(m / d);
    const CountInt aut = d == 2 ? CountInt(6) : CountInt(euler_phi(d)) * d;
    rows.push_back(make_row(std::move(kernel), 2 * d, "I_2(" + std::to_string(d) + ")", z, aut));
  }
  return rows;
}

inline std::vector<EndoTableRow> rows_A(unsigned n) {
  const std::string self = "A_" + std::to_string(n);
  if (n == 1) return {make_row(self, 1, "{1}", 1, CountInt(1)), make_row("{1}", 2, self, 1, CountInt(1))};
  const GroupId id = GroupId::A(n);
  return {make_row(self, 1, "{1}", 1, CountInt(1)),
          make_row(self + "^+", 2, "Cyc(2)", involution_count(id), CountInt(1)),
          make_row("{1}", factorial(n + 1), self, 1, factorial(n + 1))};
}

inline std::vector<EndoTableRow> rows_C(unsigned n) {
  const GroupId id = GroupId::C(n);
  const std::string self = "C_" + std::to_string(n);
  const std::string sym = "Sym(" + std::to_string(n) + ")";
  const CountInt v = involution_count(id);
  const CountInt nf = factorial(n);
  const bool odd = n % 2 == 1;
  std::vector<EndoTableRow> rows{
      make_row(self, 1, "{1}", 1, CountInt(1)),
      make_row(self + "^+", 2, "Cyc(2)", v, CountInt(1)),
      make_row("(" + self + ")_1", 2, "Cyc(2)", v, CountInt(1)),
      make_row("+" + self, 2, "Cyc(2)", v, CountInt(1)),
      make_row("(" + self + ")_1^+", 4, "Cyc(2)^2", klein_subgroup_count(n), CountInt(6)),
      make_row("N", nf, sym, symmetric_subgroup_count(id), nf),
      make_row("N^+", 2 * nf, "Cyc(2)×" + sym, c2_x_symmetric_subgroup_count(n), CountInt(2 * nf)),
      make_row("{±1}", pow2(n - 1) * nf, self + "/{±1}", index2_mod_centre_count(id),
               odd ? std::optional<CountInt>(pow2(n - 1) * nf) : std::nullopt),
      make_row("{1}", pow2(n) * nf, self, 1, aut_order(id))};
  std::stable_sort(rows.begin(), rows.end(),
                   [](const EndoTableRow& a, const EndoTableRow& b) { return a.kernel_index < b.kernel_index; });
  return rows;
}

inline std::vector<EndoTableRow> rows_D(unsigned n) {
  const GroupId id = GroupId::D(n);
  const std::string self = "D_" + std::to_string(n);
  const CountInt nf = factorial(n);
  std::vector<EndoTableRow> rows{make_row(self, 1, "{1}", 1, CountInt(1)),
                                 make_row(self + "^+", 2, "Cyc(2)", involution_count(id), CountInt(1)),
                                 make_row("N", nf, "Sym(" + std::to_string(n) + ")", symmetric_subgroup_count(id), nf)};
  if (n % 2 == 0)
    rows.push_back(make_row("{±1}", pow2(n - 2) * nf, self + "/{±1}", index2_mod_centre_count(id), std::nullopt));
  rows.push_back(make_row("{1}", pow2(n - 1) * nf, self, 1, aut_order(id)));
  return rows;
}

}  // namespace detail

inline HomTable endomorphism_table(const GroupId& id) {
  std::vector<EndoTableRow> rows;
  const unsigned n = id.param();
  if (uses_constant_table(id)) {
    rows = exceptional_constants(id);
  } else {
    switch (id.family()) {
      case Family::I2: rows = detail::rows_I2(n); break;
      case Family::A: rows = detail::rows_A(n); break;
      case Family::C: rows = n == 2 ? detail::rows_I2(4) : detail::rows_C(n); break;
      case Family::D: rows = detail::rows_D(n); break;
      default: throw std::logic_error("unreachable");
    }
  }
  CountInt total = sum_e(rows);
  return {to_spec(id), id, std::move(rows), std::move(total)};
}

/// Hom(I_2(p), target) for an odd prime p: kernels I_2(p), ⟨r⟩ and {1}.
inline HomTable hom_table_I2p(unsigned p, const GroupId& target) {
  detail::require_odd_prime(p);
  const std::string source = "I_2(" + std::to_string(p) + ")";
  std::vector<EndoTableRow> rows{
      detail::make_row(source, 1, "{1}", 1, CountInt(1)),
      detail::make_row("⟨r⟩", 2, "Cyc(2)", involution_count(target), CountInt(1)),
      detail::make_row("{1}", 2 * p, source, dihedral_subgroup_count(p, target), CountInt(p) * (p - 1))};
  CountInt total = sum_e(rows);
  return {"I2:" + std::to_string(p), target, std::move(rows), std::move(total)};
}

// ---------------------------------------------------------------------------
// CSV

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// Splits one record; quoted fields may contain commas and doubled quotes.
inline std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::runtime_error("unterminated quoted CSV field");
  return fields;
}

inline std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace detail

inline constexpr const char* kTableCsvHeader = "kernel_label,kernel_index,quotient_label,z,aut,e";

inline void write_csv(std::ostream& os, const HomTable& t) {
  os << kTableCsvHeader << "\n";
  for (const auto& r : t.rows) {
    os << detail::csv_field(r.kernel_label) << ',' << r.kernel_index << ',' << detail::csv_field(r.quotient_label)
       << ',' << r.z << ',' << (r.aut ? r.aut->str() : std::string("N/A")) << ',' << r.e << "\n";
  }
  os << "# source=" << t.source << " target=" << to_spec(t.target) << " total=" << t.total << "\n";
}

inline std::string to_csv(const HomTable& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

inline HomTable parse_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || detail::strip_cr(line) != kTableCsvHeader)
    throw std::runtime_error("CSV header mismatch");
  HomTable t{"", GroupId::H3(), {}, 0};
  bool trailer = false;
  while (std::getline(is, line)) {
    line = detail::strip_cr(line);
    if (line.empty()) continue;
    if (line.rfind("# ", 0) == 0) {
      std::istringstream kv(line.substr(2));
      std::string token;
      while (kv >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw std::runtime_error("bad CSV trailer token: " + token);
        const auto key = token.substr(0, eq);
        const auto value = token.substr(eq + 1);
        if (key == "source") t.source = value;
        else if (key == "target") t.target = parse_group_spec(value);
        else if (key == "total") t.total = CountInt(value);
      }
      trailer = true;
      continue;
    }
    const auto f = detail::csv_split(line);
    if (f.size() != 6) throw std::runtime_error("CSV row needs 6 fields: " + line);
    EndoTableRow r{f[0], CountInt(f[1]), f[2], CountInt(f[3]),
                   f[4] == "N/A" ? std::nullopt : std::optional<CountInt>(CountInt(f[4])), CountInt(f[5])};
    t.rows.push_back(std::move(r));
  }
  if (!trailer) throw std::runtime_error("CSV is missing the totals line");
  return t;
}

inline HomTable parse_csv(const std::string& text) {
  std::istringstream is(text);
  return parse_csv(is);
}

// ---------------------------------------------------------------------------
// JSON (counts as decimal strings; key order fixed)

inline nlohmann::ordered_json to_json(const HomTable& t) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json j;
    j["kernel_label"] = r.kernel_label;
    j["kernel_index"] = r.kernel_index.str();
    j["quotient_label"] = r.quotient_label;
    j["z"] = r.z.str();
    j["aut"] = r.aut ? nlohmann::ordered_json(r.aut->str()) : nlohmann::ordered_json(nullptr);
    j["e"] = r.e.str();
    rows.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["source"] = t.source;
  out["target"] = to_spec(t.target);
  out["rows"] = std::move(rows);
  out["total"] = t.total.str();
  return out;
}

}  // namespace reflendo
