#include "decay/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "decay/kramers.hpp"

namespace decay {

std::string format_double(double v) {
  std::array<char, 40> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

namespace {

double parse_double(const std::string& tok, std::size_t line_no, const char* col) {
  double v = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + tok +
                     "' in column " + col);
  }
  return v;
}

int parse_int(const std::string& tok, std::size_t line_no, const char* col) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad integer '" + tok +
                     "' in column " + col);
  }
  return v;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

}  // namespace

Dataset load_dataset(std::istream& in, std::string provenance) {
  Dataset ds;
  ds.provenance = std::move(provenance);
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {
      if (line != kDatasetCsvHeader) {
        throw ParseError("line " + std::to_string(line_no) + ": expected header '" +
                         std::string(kDatasetCsvHeader) + "'");
      }
      saw_header = true;
      continue;
    }
    auto f = split_csv(line);
    if (f.size() != 14) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 14 fields, got " +
                       std::to_string(f.size()));
    }
    NuclideRecord r;
    r.element = f[0];
    r.a = parse_int(f[1], line_no, "A");
    r.z = parse_int(f[2], line_no, "Z");
    r.a_cl = parse_int(f[3], line_no, "A_cl");
    r.z_cl = parse_int(f[4], line_no, "Z_cl");
    r.e_tke = parse_double(f[5], line_no, "E_TKE_MeV");
    r.e_tke_err = parse_double(f[6], line_no, "E_TKE_err_MeV");
    r.q_total = parse_double(f[7], line_no, "Q_MeV");
    r.q_err = parse_double(f[8], line_no, "Q_err_MeV");
    r.t_half_exp = parse_double(f[9], line_no, "T_half_exp_yr");
    r.t_half_err_lo = parse_double(f[10], line_no, "T_half_err_lo_yr");
    r.t_half_err_hi = parse_double(f[11], line_no, "T_half_err_hi_yr");
    r.role = role_from_string(f[12]);
    r.decay_class = decay_class_from_string(f[13]);
    validate(r);
    ds.records.push_back(std::move(r));
  }
  if (!saw_header) throw ParseError("empty input: missing CSV header");
  return ds;
}

Dataset load_dataset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open dataset file: " + path);
  return load_dataset(in, path);
}

void serialize_dataset(std::ostream& out, const Dataset& ds) {
  out << kDatasetCsvHeader << '\n';
  for (const auto& r : ds.records) {
    out << r.element << ',' << r.a << ',' << r.z << ',' << r.a_cl << ',' << r.z_cl << ','
        << format_double(r.e_tke) << ',' << format_double(r.e_tke_err) << ','
        << format_double(r.q_total) << ',' << format_double(r.q_err) << ','
        << format_double(r.t_half_exp) << ',' << format_double(r.t_half_err_lo) << ','
        << format_double(r.t_half_err_hi) << ',' << to_string(r.role) << ','
        << to_string(r.decay_class) << '\n';
  }
}

ParameterSet load_parameters(std::istream& in) {
  ParameterSet p;
  std::array<bool, 20> seen{};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip_cr(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int idx = 0;
    double value = 0.0, rel_pct = 0.0;
    if (!(ls >> idx >> value >> rel_pct)) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'index value rel_err_percent'");
    }
    if (idx < 1 || idx > 20) {
      throw ParseError("line " + std::to_string(line_no) + ": index " + std::to_string(idx) +
                       " outside 1-20");
    }
    if (rel_pct < 0.0) {
      throw ParseError("line " + std::to_string(line_no) + ": negative relative error");
    }
    p.a[idx - 1] = value;
    p.rel_err[idx - 1] = rel_pct / 100.0;
    seen[idx - 1] = true;
  }
  for (int i = 0; i < 20; ++i) {
    if (!seen[i]) {
      throw ParseError("parameter file incomplete: missing index " + std::to_string(i + 1));
    }
  }
  return p;
}

ParameterSet load_parameters_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open parameter file: " + path);
  return load_parameters(in);
}

void serialize_parameters(std::ostream& out, const ParameterSet& params) {
  for (int i = 0; i < 20; ++i) {
    out << (i + 1) << ' ' << format_double(params.a[i]) << ' '
        << format_double(params.rel_err[i] * 100.0) << '\n';
  }
}

}  // namespace decay
