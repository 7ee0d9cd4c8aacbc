#pragma once

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "acidzeta/core.hpp"

namespace acidzeta {

struct ZeroEntry {
  double lambda = 0.0;  // ordinate, Im rho > 0
  double sigma = 0.5;   // Re rho in (0, 1)
  int multiplicity = 1;

  friend bool operator==(const ZeroEntry&, const ZeroEntry&) = default;
};

enum class ZeroSource { computed, file, synthetic };

inline const char* source_name(ZeroSource s) {
  switch (s) {
    case ZeroSource::computed: return "computed";
    case ZeroSource::file: return "file";
    case ZeroSource::synthetic: return "synthetic";
  }
  return "unknown";
}

// ordered by (lambda, sigma); mirrored off-line zeros share an ordinate
struct ZeroSet {
  std::vector<ZeroEntry> entries;
  ZeroSource source = ZeroSource::synthetic;
  double t_max = 0.0;  // height up to which the set is certified complete

  bool empty() const { return entries.empty(); }
  size_t size() const { return entries.size(); }
};

inline void validate(const ZeroSet& zs) {
  const ZeroEntry* prev = nullptr;
  for (const auto& e : zs.entries) {
    if (!(e.lambda > 0.0)) throw InvariantError("zero ordinates must be positive");
    if (!(e.sigma > 0.0 && e.sigma < 1.0))
      throw InvariantError("zero real parts must lie in (0, 1)");
    if (e.multiplicity < 1) throw InvariantError("multiplicity must be positive");
    if (prev) {
      if (e.lambda < prev->lambda ||
          (e.lambda == prev->lambda && e.sigma <= prev->sigma))
        throw InvariantError("zero entries must ascend by (lambda, sigma)");
    }
    prev = &e;
  }
  // every off-line entry needs its mirrored partner at the same ordinate
  for (size_t i = 0; i < zs.entries.size(); ++i) {
    const auto& e = zs.entries[i];
    if (e.sigma == 0.5) continue;
    const double want = 1.0 - e.sigma;
    bool found = false;
    for (size_t j = i; j-- > 0 && zs.entries[j].lambda == e.lambda;)
      if (zs.entries[j].sigma == want && zs.entries[j].multiplicity == e.multiplicity)
        found = true;
    for (size_t j = i + 1; j < zs.entries.size() && zs.entries[j].lambda == e.lambda; ++j)
      if (zs.entries[j].sigma == want && zs.entries[j].multiplicity == e.multiplicity)
        found = true;
    if (!found)
      throw InvariantError("off-line zero at lambda=" + fmt12(e.lambda) +
                           " lacks its mirrored partner");
  }
}

inline void sort_entries(std::vector<ZeroEntry>& v) {
  std::sort(v.begin(), v.end(), [](const ZeroEntry& a, const ZeroEntry& b) {
    return a.lambda != b.lambda ? a.lambda < b.lambda : a.sigma < b.sigma;
  });
}

// text format: '#' comments, blank lines, "lambda" or "lambda sigma" per line, ascending
inline ZeroSet parse_zero_file(std::istream& in) {
  ZeroSet zs;
  zs.source = ZeroSource::file;
  std::string line;
  int lineno = 0;
  double prev_lambda = 0.0, prev_sigma = -1.0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ls(line);
    double lambda, sigma = 0.5;
    if (!(ls >> lambda))
      throw ParseError("parse error at line " + std::to_string(lineno) + ": not a number");
    std::string rest;
    if (ls >> rest) {
      std::istringstream ss(rest);
      char trailing;
      if (!(ss >> sigma) || ss >> trailing || ls >> rest)
        throw ParseError("parse error at line " + std::to_string(lineno) +
                         ": expected 'lambda' or 'lambda sigma'");
    }
    if (!(lambda > 0.0))
      throw ParseError("parse error at line " + std::to_string(lineno) +
                       ": ordinate must be positive");
    if (!(sigma > 0.0 && sigma < 1.0))
      throw ParseError("parse error at line " + std::to_string(lineno) +
                       ": sigma must lie in (0, 1)");
    if (lambda < prev_lambda || (lambda == prev_lambda && sigma < prev_sigma))
      throw ParseError("order error at line " + std::to_string(lineno) +
                       ": ordinates must ascend");
    if (lambda == prev_lambda && sigma == prev_sigma && !zs.entries.empty()) {
      zs.entries.back().multiplicity += 1;
    } else {
      zs.entries.push_back({lambda, sigma, 1});
    }
    prev_lambda = lambda;
    prev_sigma = sigma;
  }
  if (!zs.entries.empty()) zs.t_max = zs.entries.back().lambda;
  validate(zs);
  return zs;
}

inline ZeroSet parse_zero_file(const std::string& text) {
  std::istringstream in(text);
  return parse_zero_file(in);
}

inline void serialize(const ZeroSet& zs, std::ostream& out, const std::string& certificate = {}) {
  if (!certificate.empty()) out << "# " << certificate << "\n";
  for (const auto& e : zs.entries)
    for (int m = 0; m < e.multiplicity; ++m) {
      out << fmt12(e.lambda);
      if (e.sigma != 0.5) out << " " << fmt12(e.sigma);
      out << "\n";
    }
}

inline std::string serialize(const ZeroSet& zs, const std::string& certificate = {}) {
  std::ostringstream out;
  serialize(zs, out, certificate);
  return out.str();
}

}  // namespace acidzeta
