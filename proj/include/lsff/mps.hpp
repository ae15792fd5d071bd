// Copyright 2026 The LSFF Diet Cost Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LSFF_MPS_HPP
#define LSFF_MPS_HPP

// Fixed-format MPS export. Column layout (1-based character positions):
//
//   field 1:  2-3    row type (N, E, L, G) in ROWS
//   field 2:  5-12   column name (COLUMNS) / set name (RHS)
//   field 3: 15-22   row name
//   field 4: 25-36   value, right-padded, at most 12 characters
//
// Names are generated (R0000001, C0000001, objective row COST) so they
// always fit the 8-character fields; one entry is written per line and zero
// coefficients are omitted. A column with no non-zero entry is written with
// an explicit zero objective entry so that it is still declared.

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "lsff/lp.hpp"

namespace lsff::lp {

namespace detail {

inline std::string mps_number(double v) {
  char buf[64];
  for (int prec = 12; prec >= 1; --prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::string(buf).size() <= 12) return buf;
  }
  return buf;
}

inline std::string mps_name(char prefix, std::size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%c%07zu", prefix, index + 1);
  return buf;
}

inline std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

inline void mps_entry(std::ostream& os, const std::string& f2, const std::string& f3, double v) {
  // Four leading spaces put field 2 at column 5, field 3 at 15, field 4 at 25.
  std::string line = "    " + pad(f2, 10) + pad(f3, 10) + mps_number(v);
  os << line << '\n';
}

}  // namespace detail

inline void write_mps(std::ostream& os, const LpModel& model, const std::string& name = "LSFFLP") {
  model.validate();
  os << "NAME          " << name << '\n';
  os << "ROWS\n";
  os << " N  COST\n";
  for (std::size_t i = 0; i < model.num_rows(); ++i) {
    char type = 'E';
    if (model.rows[i].sense == Sense::kLessEqual) type = 'L';
    if (model.rows[i].sense == Sense::kGreaterEqual) type = 'G';
    os << ' ' << type << "  " << detail::mps_name('R', i) << '\n';
  }
  os << "COLUMNS\n";
  for (std::size_t j = 0; j < model.num_variables(); ++j) {
    const std::string col = detail::mps_name('C', j);
    bool any = false;
    if (model.objective[j] != 0.0) {
      detail::mps_entry(os, col, "COST", model.objective[j]);
      any = true;
    }
    for (std::size_t i = 0; i < model.num_rows(); ++i) {
      const double a = model.rows[i].coefficients[j];
      if (a == 0.0) continue;
      detail::mps_entry(os, col, detail::mps_name('R', i), a);
      any = true;
    }
    if (!any) detail::mps_entry(os, col, "COST", 0.0);
  }
  os << "RHS\n";
  for (std::size_t i = 0; i < model.num_rows(); ++i) {
    if (model.rows[i].rhs == 0.0) continue;
    detail::mps_entry(os, "RHS", detail::mps_name('R', i), model.rows[i].rhs);
  }
  os << "ENDATA\n";
}

}  // namespace lsff::lp

#endif  // LSFF_MPS_HPP
