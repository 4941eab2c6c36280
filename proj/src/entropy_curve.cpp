#include "entroscale/entropy_curve.hpp"

#include <cstdio>
#include <sstream>

#include "entroscale/errors.hpp"

namespace entroscale {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        fields.back() += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else if (ch != '\r') {
      fields.back() += ch;
    }
  }
  return fields;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& out, const EntropyCurve& curve, const std::vector<std::string>& metadata) {
  for (const auto& line : metadata) out << "# " << line << '\n';
  out << "l,S_bits,seed,tree,D,L\n";
  for (const auto& s : curve.samples) {
    out << s.l << ',' << format_double(s.S) << ',' << curve.seed << ',' << csv_field(curve.tree) << ',' << curve.dim
        << ',' << curve.L << '\n';
  }
}

EntropyCurve read_csv(std::istream& in) {
  EntropyCurve curve;
  std::string line;
  bool header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split_csv(line);
    if (!header) {
      if (fields.size() < 2 || fields[0] != "l" || fields[1] != "S_bits") {
        throw InvalidInput("curve CSV must start with the header l,S_bits,...");
      }
      header = true;
      continue;
    }
    if (fields.size() != 6) throw InvalidInput("curve CSV line " + std::to_string(line_no) + ": expected 6 fields");
    try {
      EntropySample s;
      std::size_t used = 0;
      s.l = std::stoi(fields[0], &used);
      if (used != fields[0].size()) throw std::invalid_argument("l");
      s.S = std::stod(fields[1], &used);
      if (used != fields[1].size()) throw std::invalid_argument("S");
      if (!curve.samples.empty() && s.l <= curve.samples.back().l) {
        throw InvalidInput("curve CSV line " + std::to_string(line_no) + ": l values must increase");
      }
      curve.samples.push_back(s);
      curve.seed = std::stoull(fields[2]);
      curve.tree = fields[3];
      curve.dim = std::stoi(fields[4]);
      curve.L = std::stoi(fields[5]);
    } catch (const InvalidInput&) {
      throw;
    } catch (const std::exception&) {
      throw InvalidInput("curve CSV line " + std::to_string(line_no) + ": malformed number");
    }
  }
  if (!header) throw InvalidInput("curve CSV has no header");
  return curve;
}

}  // namespace entroscale
