#include "expansio/betti.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace expansio {

void BettiTable::add_fine(int i, const std::vector<Exponent>& a, Exponent count) {
  if (count == 0) return;
  has_fine = true;
  fine[{i, a}] += count;
  total[{i, std::accumulate(a.begin(), a.end(), Exponent(0))}] += count;
}

void BettiTable::add_total(int i, Exponent k, Exponent count) {
  if (count == 0) return;
  total[{i, k}] += count;
}

Exponent regularity(const BettiTable& B) {
  if (B.empty()) throw std::invalid_argument("regularity of an empty Betti table");
  Exponent r = std::numeric_limits<Exponent>::min();
  for (const auto& [key, count] : B.total)
    if (count > 0) r = std::max(r, key.second - key.first);
  return r;
}

int projdim(const BettiTable& B) {
  if (B.empty()) throw std::invalid_argument("projective dimension of an empty Betti table");
  int p = 0;
  for (const auto& [key, count] : B.total)
    if (count > 0) p = std::max(p, key.first);
  return p;
}

std::vector<Exponent> betti_polynomial(const BettiTable& B) {
  std::vector<Exponent> coeffs(projdim(B) + 1, 0);
  for (const auto& [key, count] : B.total) coeffs[key.first] += count;
  return coeffs;
}

bool is_linear_table(const BettiTable& B, Exponent d) {
  for (const auto& [key, count] : B.total)
    if (count > 0 && key.second != d + key.first) return false;
  return true;
}

BettiTable betti_of_minimal_complex(const ChainComplex& C) {
  BettiTable b;
  for (size_t i = 0; i < C.modules.size(); ++i)
    for (const auto& s : C.modules[i].shifts)
      b.add_fine(static_cast<int>(i), s.exponents(), 1);
  return b;
}

std::string render_betti_grid(const BettiTable& B) {
  if (B.empty()) return "(empty table)\n";
  int pd = projdim(B);
  Exponent row_min = std::numeric_limits<Exponent>::max();
  Exponent row_max = std::numeric_limits<Exponent>::min();
  for (const auto& [key, count] : B.total) {
    if (count == 0) continue;
    row_min = std::min(row_min, key.second - key.first);
    row_max = std::max(row_max, key.second - key.first);
  }
  auto cell = [&](int i, Exponent stratum) -> std::string {
    auto it = B.total.find({i, stratum + i});
    if (it == B.total.end() || it->second == 0) return ".";
    return std::to_string(it->second);
  };

  std::vector<Exponent> totals(pd + 1, 0);
  for (const auto& [key, count] : B.total) totals[key.first] += count;

  size_t width = 1;
  for (int i = 0; i <= pd; ++i) width = std::max(width, std::to_string(totals[i]).size());

  std::ostringstream out;
  auto pad = [&](const std::string& s) {
    if (s.size() < width + 1) out << std::string(width + 1 - s.size(), ' ');
    out << s;
  };
  out << "       ";
  for (int i = 0; i <= pd; ++i) pad(std::to_string(i));
  out << "\n";
  out << "total: ";
  for (int i = 0; i <= pd; ++i) pad(std::to_string(totals[i]));
  out << "\n";
  for (Exponent r = row_min; r <= row_max; ++r) {
    std::string label = std::to_string(r) + ":";
    out << label << std::string(label.size() < 7 ? 7 - label.size() : 1, ' ');
    for (int i = 0; i <= pd; ++i) pad(cell(i, r));
    out << "\n";
  }
  return out.str();
}

std::string betti_to_json(const BettiTable& B) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, count] : B.total) {
    if (count == 0) continue;
    arr.push_back({{"i", key.first}, {"k", key.second}, {"count", count}});
  }
  return arr.dump();
}

std::string diff_betti(const BettiTable& got, const BettiTable& expected,
                       const std::string& got_name, const std::string& expected_name) {
  std::ostringstream out;
  std::set<std::pair<int, Exponent>> keys;
  for (const auto& [k, v] : got.total)
    if (v) keys.insert(k);
  for (const auto& [k, v] : expected.total)
    if (v) keys.insert(k);
  for (const auto& k : keys) {
    Exponent a = got.total.count(k) ? got.total.at(k) : 0;
    Exponent b = expected.total.count(k) ? expected.total.at(k) : 0;
    if (a != b)
      out << "  (i=" << k.first << ", k=" << k.second << "): " << got_name << "=" << a << " vs "
          << expected_name << "=" << b << "\n";
  }
  return out.str();
}

}  // namespace expansio
