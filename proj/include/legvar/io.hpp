// Text input format shared by the data files and the command-line tool.
//
//   # comment
//   n=<n>                 (or "@nvars <2n>"; a leading @vars line also fixes it)
//   form=standard | form=<path to JSON matrix> | form=[[...], ...]
//   @vars <name> ...      (optional, 2n names)
//   <one polynomial per line>
#pragma once

#include "legvar/legendrian.hpp"
#include "legvar/polynomial.hpp"
#include "legvar/symplectic.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace legvar {

class InputError : public std::runtime_error {
 public:
  InputError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line(line), column(column) {}
  std::size_t line, column;
};

struct ParsedInput {
  std::size_t nvars = 0;
  std::optional<QMatrix> form;  // nullopt: standard form
  std::string form_source = "standard";
  VarNames names;
  std::vector<Polynomial> generators;

  SymplecticForm symplectic_form() const {
    return form ? SymplecticForm(*form) : standard_form(nvars / 2);
  }
};

/// Entries may be JSON integers or strings such as "-1/3".
inline QMatrix form_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("form: expected a non-empty array of rows");
  const std::size_t d = j.size();
  QMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    if (!j[r].is_array() || j[r].size() != d) throw std::invalid_argument("form: matrix is not square");
    for (std::size_t c = 0; c < d; ++c) {
      const auto& e = j[r][c];
      if (e.is_number_integer()) m(r, c) = Rational(e.get<long>());
      else if (e.is_string()) m(r, c) = parse_rational(e.get<std::string>());
      else throw std::invalid_argument("form: entries must be integers or rational strings");
    }
  }
  return m;
}

inline nlohmann::json form_to_json(const QMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      if (x.get_den() == 1 && x.get_num().fits_slong_p()) row.push_back(x.get_num().get_si());
      else row.push_back(to_string(x));
    }
    rows.push_back(row);
  }
  return rows;
}

inline ParsedInput parse_input(std::string_view text, const std::filesystem::path& base_dir = {}) {
  ParsedInput in;
  std::istringstream ss{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(ss, raw)) {
    ++lineno;
    std::string line = trim(raw);
    std::size_t col = raw.find_first_not_of(" \t") + 1;
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("n=", 0) == 0 || line.rfind("@nvars", 0) == 0) {
      if (in.nvars) throw InputError("dimension given twice", lineno, col);
      bool half = line[0] == 'n';
      std::string v = trim(line.substr(half ? 2 : 6));
      std::size_t k = 0;
      try {
        k = std::stoul(v);
      } catch (const std::exception&) {
        throw InputError("expected a positive integer", lineno, col + (half ? 2 : 6));
      }
      if (k == 0 || (!half && k % 2)) throw InputError("dimension must be positive and even", lineno, col);
      in.nvars = half ? 2 * k : k;
      continue;
    }
    if (line.rfind("@vars", 0) == 0) {
      std::istringstream ns(line.substr(5));
      VarNames names;
      for (std::string w; ns >> w;) names.push_back(w);
      // Without a dimension line the name list fixes it.
      if (!in.nvars && !names.empty() && names.size() % 2 == 0) in.nvars = names.size();
      if (names.size() != in.nvars) throw InputError("@vars must list exactly 2n names", lineno, col);
      in.names = names;
      continue;
    }
    if (!in.nvars) throw InputError("missing header line n=<n>", lineno, col);
    if (line.rfind("form=", 0) == 0) {
      std::string v = trim(line.substr(5));
      try {
        if (v == "standard") {
          in.form.reset();
          in.form_source = "standard";
        } else if (!v.empty() && v[0] == '[') {
          in.form = form_from_json(nlohmann::json::parse(v));
          in.form_source = "inline";
        } else {
          std::filesystem::path p = v;
          if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
          std::ifstream f(p);
          if (!f) throw std::invalid_argument("cannot open form file " + p.string());
          in.form = form_from_json(nlohmann::json::parse(f));
          in.form_source = p.string();
        }
      } catch (const std::exception& e) {
        throw InputError(e.what(), lineno, col + 5);
      }
      if (in.form && in.form->rows() != in.nvars) throw InputError("form size differs from 2n", lineno, col + 5);
      continue;
    }
    try {
      in.generators.push_back(parse_poly(line, in.nvars, in.names));
    } catch (const ParseError& e) {
      throw InputError(e.what(), lineno, col + e.position());
    } catch (const std::exception& e) {
      throw InputError(e.what(), lineno, col);
    }
  }
  if (!in.nvars) throw InputError("missing header line n=<n>", lineno + 1, 1);
  if (in.form) {
    try {
      SymplecticForm check(*in.form);
    } catch (const std::exception& e) {
      throw InputError(e.what(), 1, 1);
    }
  }
  return in;
}

inline ParsedInput read_input_file(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_input(buf.str(), path.parent_path());
}

/// Serializes a presentation so that parse_input reproduces it.
inline std::string dump_input(const VarietyPresentation& v, const VarNames& names = {}) {
  std::ostringstream os;
  os << "# " << v.name << "\n";
  os << "n=" << v.n() << "\n";
  if (v.form == standard_form(v.n())) os << "form=standard\n";
  else os << "form=" << form_to_json(v.form.matrix()).dump() << "\n";
  if (!names.empty()) {
    os << "@vars";
    for (const auto& s : names) os << " " << s;
    os << "\n";
  }
  for (const auto& g : v.generators) os << to_string(g, names) << "\n";
  return os.str();
}

inline VarietyPresentation to_presentation(const ParsedInput& in, const std::string& name = "input") {
  VarietyPresentation v;
  v.name = name;
  v.nvars = in.nvars;
  v.form = in.symplectic_form();
  v.generators = in.generators;
  v.validate();
  return v;
}

}  // namespace legvar
