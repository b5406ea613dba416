#include "eiskern/io/report.hpp"

#include <cctype>
#include <charconv>
#include <cstring>
#include <cmath>
#include <fstream>
#include <sstream>

#include "eiskern/error.hpp"

namespace eiskern::io {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "md") return Format::Md;
  throw UsageError("unknown format '" + name + "'");
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Md: return "md";
  }
  return "json";
}

Json to_json(const PrecisionProfile& p) {
  Json j;
  j["P"] = p.P;
  j["N_q"] = p.N_q;
  j["M_tail"] = p.M_tail;
  j["H_group"] = p.H_group;
  j["tol_bits"] = p.tol_bits;
  return j;
}

Json to_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  Json params = Json::object();
  for (const auto& [k, v] : c.parameters) params[k] = v;
  j["parameters"] = params;
  j["profile"] = to_json(c.profile);
  j["format"] = to_string(c.format);
  j["seed"] = c.seed;
  return j;
}

PrecisionProfile profile_from_json(const Json& j, PrecisionProfile base) {
  if (!j.is_object()) throw BadData("profile must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (key == "schema") {
      if (!it->is_string() || it->get<std::string>() != kSchema)
        throw SchemaMismatch("profile schema must be \"" + std::string(kSchema) + "\"");
      continue;
    }
    if (key == "name") continue;
    long* field = key == "P"          ? &base.P
                  : key == "N_q"      ? &base.N_q
                  : key == "M_tail"   ? &base.M_tail
                  : key == "H_group"  ? &base.H_group
                  : key == "tol_bits" ? &base.tol_bits
                                      : nullptr;
    if (!field) throw SchemaMismatch("unknown profile field '" + key + "'");
    if (!it->is_number_integer()) throw BadData("profile field '" + key + "' must be an integer");
    *field = it->get<long>();
  }
  return base.normalized();
}

PrecisionProfile load_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadData("cannot open profile file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw BadData("profile file " + path + ": " + e.what());
  }
  // M_tail and tol_bits are derived from P unless given.
  PrecisionProfile base;
  base.M_tail = 0;
  base.tol_bits = 0;
  return profile_from_json(j, base);
}

int digits_for(long P) { return static_cast<int>(std::floor(static_cast<double>(P) * 0.30102999566398120)); }

std::string format_real(const mp::Real& x, long P) { return x.to_string(digits_for(P)); }

std::string format_complex(const mp::Complex& z, long P) {
  return format_real(z.re(), P) + (z.im().sign() < 0 ? " - " : " + ") + format_real(mp::abs(z.im()), P) + "i";
}

Json complex_json(const mp::Complex& z, long P) {
  Json j;
  j["re"] = format_real(z.re(), P);
  j["im"] = format_real(z.im(), P);
  return j;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

mp::Complex parse_complex(const std::string& text, mp::Bits prec) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  auto bad = [&]() { return UsageError("cannot parse complex number '" + text + "'"); };
  auto real = [&](const std::string& part) {
    if (part.empty()) throw bad();
    for (char ch : part)
      if (!std::isdigit(static_cast<unsigned char>(ch)) && !std::strchr("+-.eE", ch)) throw bad();
    try {
      return mp::Real::parse(part, prec);
    } catch (const std::exception&) {
      throw bad();
    }
  };
  if (t.size() > 2 && t.front() == '(' && t.back() == ')') {
    auto comma = t.find(',');
    if (comma == std::string::npos) throw bad();
    return mp::Complex(real(t.substr(1, comma - 1)), real(t.substr(comma + 1, t.size() - comma - 2)));
  }
  if (t.empty()) throw bad();
  if (t.back() != 'i') return mp::Complex(real(t));
  t.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = t.size(); i-- > 1;)
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
      split = i;
      break;
    }
  std::string re = split == std::string::npos ? "0" : t.substr(0, split);
  std::string im = split == std::string::npos ? t : t.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return mp::Complex(real(re), real(im));
}

namespace {

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '|') out += '\\';
    out += ch == '\n' ? ' ' : ch;
  }
  return out;
}

}  // namespace

std::string render(const Report& r) {
  Json header = to_json(r.config);
  std::ostringstream os;
  switch (r.config.format) {
    case Format::Json: {
      Json j;
      j["schema"] = kSchema;
      j["config"] = header;
      j["result"] = r.result;
      os << j.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      os << "# schema " << kSchema << "\n# config " << header.dump() << "\n";
      if (r.columns.empty()) {
        os << "key,value\n";
        for (auto it = r.result.begin(); it != r.result.end(); ++it)
          os << csv_cell(it.key()) << "," << csv_cell(it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
        break;
      }
      for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << csv_cell(r.columns[i]);
      os << "\n";
      for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
        os << "\n";
      }
      break;
    }
    case Format::Md: {
      os << "# eiskern " << r.config.command << "\n\n<!-- schema " << kSchema << " config " << header.dump()
         << " -->\n\n";
      std::vector<std::string> cols = r.columns;
      std::vector<std::vector<std::string>> rows = r.rows;
      if (cols.empty()) {
        cols = {"key", "value"};
        for (auto it = r.result.begin(); it != r.result.end(); ++it)
          rows.push_back({it.key(), it->is_string() ? it->get<std::string>() : it->dump()});
      }
      os << "|";
      for (const auto& c : cols) os << " " << md_cell(c) << " |";
      os << "\n|";
      for (std::size_t i = 0; i < cols.size(); ++i) os << " --- |";
      os << "\n";
      for (const auto& row : rows) {
        os << "|";
        for (const auto& c : row) os << " " << md_cell(c) << " |";
        os << "\n";
      }
      break;
    }
  }
  return os.str();
}

}  // namespace eiskern::io
