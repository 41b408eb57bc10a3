// Copyright 2026 The cfq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#ifndef CFQ_RECORDS_H_
#define CFQ_RECORDS_H_

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cfq/jacobi.hpp"
#include "cfq/scan.hpp"

namespace cfq {

// Report rows. Serialization is by hand so that key order, number
// formatting, and null handling are pinned exactly; reports are compared
// byte for byte in tests.

struct ScanRecord {
  int64_t m = 0;
  int64_t a = 0;
  int64_t b = 0;
  int64_t genus = 0;
  bool hyperelliptic = false;
  std::optional<AutLabel> witness;
  bool smooth_fixed_point = false;
};

struct ClassifyRecord {
  int64_t m = 0;
  int64_t a = 0;
  int64_t b = 0;
  std::vector<int64_t> cm_type;
  int64_t stabilizer_order = 0;
  bool simple = false;
  bool isogenous_to_hyperelliptic = false;
  std::optional<bool> minimal;  // absent for hyperelliptic classes
};

// One row per rational prime. status is "ok", "ramified" (p divides m),
// or "skipped" (residue field above the size cap). tau holds one
// coefficient vector per residue field; weil holds one verdict per
// residue field; local_factor is the Euler factor of the single character
// (a, b) at p.
struct JacobiRecord {
  int64_t m = 0;
  int64_t a = 0;
  int64_t b = 0;
  int64_t p = 0;
  std::string status;
  std::optional<int64_t> f;
  std::optional<int64_t> num_specs;
  std::optional<std::vector<std::vector<int64_t>>> tau;
  std::optional<std::vector<bool>> weil;
  std::optional<std::vector<BigInt>> local_factor;
};

// One row per rational prime for the full product character of a label,
// one (a, b) pair per holomorphic differential.
struct LocalFactorRecord {
  int64_t m = 0;
  int64_t a = 0;
  int64_t b = 0;
  int64_t p = 0;
  std::string status;
  std::optional<int64_t> f;
  std::optional<std::vector<BigInt>> poly;
};

namespace record_io {

inline void AppendBool(std::string& out, bool v) {
  out += v ? "true" : "false";
}

inline void AppendInt(std::string& out, int64_t v) {
  out += std::to_string(v);
}

inline void AppendBig(std::string& out, const BigInt& v) { out += v.str(); }

template <typename T, typename Fn>
void AppendJsonArray(std::string& out, const std::vector<T>& v, Fn append) {
  out += '[';
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    append(out, v[i]);
  }
  out += ']';
}

// Joins with ';' inside one CSV cell; nested vectors join with '|'.
template <typename T, typename Fn>
void AppendCellArray(std::string& out, const std::vector<T>& v, Fn append) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ';';
    append(out, v[i]);
  }
}

}  // namespace record_io

inline std::string ToJsonl(const ScanRecord& r) {
  using namespace record_io;
  std::string out = "{\"m\":";
  AppendInt(out, r.m);
  out += ",\"a\":";
  AppendInt(out, r.a);
  out += ",\"b\":";
  AppendInt(out, r.b);
  out += ",\"genus\":";
  AppendInt(out, r.genus);
  out += ",\"hyperelliptic\":";
  AppendBool(out, r.hyperelliptic);
  out += ",\"witness\":";
  if (r.witness.has_value()) {
    out += '[';
    AppendInt(out, r.witness->i);
    out += ',';
    AppendInt(out, r.witness->j);
    out += ']';
  } else {
    out += "null";
  }
  out += ",\"smooth_fixed_point\":";
  AppendBool(out, r.smooth_fixed_point);
  out += '}';
  return out;
}

inline std::string CsvHeader(const ScanRecord&) {
  return "m,a,b,genus,hyperelliptic,witness,smooth_fixed_point";
}

inline std::string ToCsv(const ScanRecord& r) {
  using namespace record_io;
  std::string out;
  AppendInt(out, r.m);
  out += ',';
  AppendInt(out, r.a);
  out += ',';
  AppendInt(out, r.b);
  out += ',';
  AppendInt(out, r.genus);
  out += ',';
  AppendBool(out, r.hyperelliptic);
  out += ',';
  if (r.witness.has_value()) {
    AppendInt(out, r.witness->i);
    out += ';';
    AppendInt(out, r.witness->j);
  }
  out += ',';
  AppendBool(out, r.smooth_fixed_point);
  return out;
}

inline std::string ToJsonl(const ClassifyRecord& r) {
  using namespace record_io;
  std::string out = "{\"m\":";
  AppendInt(out, r.m);
  out += ",\"a\":";
  AppendInt(out, r.a);
  out += ",\"b\":";
  AppendInt(out, r.b);
  out += ",\"cm_type\":";
  AppendJsonArray(out, r.cm_type, AppendInt);
  out += ",\"stabilizer_order\":";
  AppendInt(out, r.stabilizer_order);
  out += ",\"simple\":";
  AppendBool(out, r.simple);
  out += ",\"isogenous_to_hyperelliptic\":";
  AppendBool(out, r.isogenous_to_hyperelliptic);
  out += ",\"minimal\":";
  if (r.minimal.has_value()) {
    AppendBool(out, *r.minimal);
  } else {
    out += "null";
  }
  out += '}';
  return out;
}

inline std::string CsvHeader(const ClassifyRecord&) {
  return "m,a,b,cm_type,stabilizer_order,simple,isogenous_to_hyperelliptic,"
         "minimal";
}

inline std::string ToCsv(const ClassifyRecord& r) {
  using namespace record_io;
  std::string out;
  AppendInt(out, r.m);
  out += ',';
  AppendInt(out, r.a);
  out += ',';
  AppendInt(out, r.b);
  out += ',';
  AppendCellArray(out, r.cm_type, AppendInt);
  out += ',';
  AppendInt(out, r.stabilizer_order);
  out += ',';
  AppendBool(out, r.simple);
  out += ',';
  AppendBool(out, r.isogenous_to_hyperelliptic);
  out += ',';
  if (r.minimal.has_value()) AppendBool(out, *r.minimal);
  return out;
}

inline std::string ToJsonl(const JacobiRecord& r) {
  using namespace record_io;
  std::string out = "{\"m\":";
  AppendInt(out, r.m);
  out += ",\"a\":";
  AppendInt(out, r.a);
  out += ",\"b\":";
  AppendInt(out, r.b);
  out += ",\"p\":";
  AppendInt(out, r.p);
  out += ",\"status\":\"";
  out += r.status;
  out += "\",\"f\":";
  if (r.f.has_value()) {
    AppendInt(out, *r.f);
  } else {
    out += "null";
  }
  out += ",\"num_specs\":";
  if (r.num_specs.has_value()) {
    AppendInt(out, *r.num_specs);
  } else {
    out += "null";
  }
  out += ",\"tau\":";
  if (r.tau.has_value()) {
    AppendJsonArray(out, *r.tau,
                    [](std::string& o, const std::vector<int64_t>& v) {
                      AppendJsonArray(o, v, AppendInt);
                    });
  } else {
    out += "null";
  }
  out += ",\"weil\":";
  if (r.weil.has_value()) {
    out += '[';
    for (size_t i = 0; i < r.weil->size(); ++i) {
      if (i > 0) out += ',';
      AppendBool(out, (*r.weil)[i]);
    }
    out += ']';
  } else {
    out += "null";
  }
  out += ",\"local_factor\":";
  if (r.local_factor.has_value()) {
    AppendJsonArray(out, *r.local_factor, AppendBig);
  } else {
    out += "null";
  }
  out += '}';
  return out;
}

inline std::string CsvHeader(const JacobiRecord&) {
  return "m,a,b,p,status,f,num_specs,tau,weil,local_factor";
}

inline std::string ToCsv(const JacobiRecord& r) {
  using namespace record_io;
  std::string out;
  AppendInt(out, r.m);
  out += ',';
  AppendInt(out, r.a);
  out += ',';
  AppendInt(out, r.b);
  out += ',';
  AppendInt(out, r.p);
  out += ',';
  out += r.status;
  out += ',';
  if (r.f.has_value()) AppendInt(out, *r.f);
  out += ',';
  if (r.num_specs.has_value()) AppendInt(out, *r.num_specs);
  out += ',';
  if (r.tau.has_value()) {
    for (size_t i = 0; i < r.tau->size(); ++i) {
      if (i > 0) out += '|';
      AppendCellArray(out, (*r.tau)[i], AppendInt);
    }
  }
  out += ',';
  if (r.weil.has_value()) {
    for (size_t i = 0; i < r.weil->size(); ++i) {
      if (i > 0) out += ';';
      AppendBool(out, (*r.weil)[i]);
    }
  }
  out += ',';
  if (r.local_factor.has_value())
    AppendCellArray(out, *r.local_factor, AppendBig);
  return out;
}

inline std::string ToJsonl(const LocalFactorRecord& r) {
  using namespace record_io;
  std::string out = "{\"m\":";
  AppendInt(out, r.m);
  out += ",\"a\":";
  AppendInt(out, r.a);
  out += ",\"b\":";
  AppendInt(out, r.b);
  out += ",\"p\":";
  AppendInt(out, r.p);
  out += ",\"status\":\"";
  out += r.status;
  out += "\",\"f\":";
  if (r.f.has_value()) {
    AppendInt(out, *r.f);
  } else {
    out += "null";
  }
  out += ",\"poly\":";
  if (r.poly.has_value()) {
    AppendJsonArray(out, *r.poly, AppendBig);
  } else {
    out += "null";
  }
  out += '}';
  return out;
}

inline std::string CsvHeader(const LocalFactorRecord&) {
  return "m,a,b,p,status,f,poly";
}

inline std::string ToCsv(const LocalFactorRecord& r) {
  using namespace record_io;
  std::string out;
  AppendInt(out, r.m);
  out += ',';
  AppendInt(out, r.a);
  out += ',';
  AppendInt(out, r.b);
  out += ',';
  AppendInt(out, r.p);
  out += ',';
  out += r.status;
  out += ',';
  if (r.f.has_value()) AppendInt(out, *r.f);
  out += ',';
  if (r.poly.has_value()) AppendCellArray(out, *r.poly, AppendBig);
  return out;
}

// Renders a full report body: CSV gets a header row; JSONL is one object
// per line. Every line ends with '\n'.
template <typename Record>
std::string RenderReport(const std::vector<Record>& rows, bool csv) {
  std::string out;
  if (csv) {
    out += CsvHeader(Record{});
    out += '\n';
  }
  for (const Record& r : rows) {
    out += csv ? ToCsv(r) : ToJsonl(r);
    out += '\n';
  }
  return out;
}

}  // namespace cfq

#endif  // CFQ_RECORDS_H_
