#include "designrank/certdoc.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "designrank/numeric.hpp"

namespace designrank {

void CertDoc::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : fields_)
    if (k == key) {
      v = value;
      return;
    }
  fields_.emplace_back(key, value);
}

void CertDoc::set(const std::string& key, double value) {
  set(key, format_double(value));
}

void CertDoc::set(const std::string& key, std::size_t value) {
  set(key, std::to_string(value));
}

void CertDoc::set(const std::string& key, bool value) {
  set(key, std::string(value ? "true" : "false"));
}

bool CertDoc::has(const std::string& key) const {
  for (const auto& [k, v] : fields_)
    if (k == key) return true;
  return false;
}

const std::string& CertDoc::get(const std::string& key) const {
  for (const auto& [k, v] : fields_)
    if (k == key) return v;
  throw std::out_of_range("document has no field '" + key + "'");
}

std::optional<std::string> CertDoc::find(const std::string& key) const {
  for (const auto& [k, v] : fields_)
    if (k == key) return v;
  return std::nullopt;
}

void CertDoc::write(std::ostream& out,
                    const std::vector<std::string>& banner) const {
  for (const auto& b : banner) out << "# " << b << "\n";
  out << "designrank-doc 1 " << kind_ << "\n";
  for (const auto& [k, v] : fields_) out << k << " = " << v << "\n";
}

CertDoc CertDoc::read(std::istream& in) {
  std::string line;
  CertDoc doc;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t pos = line.find_first_not_of(" \t");
    if (pos == std::string::npos || line[pos] == '#') continue;
    if (!header_seen) {
      std::istringstream ss(line);
      std::string magic, version, kind;
      ss >> magic >> version >> kind;
      if (magic != "designrank-doc" || version != "1" || kind.empty())
        throw std::invalid_argument("bad document header: '" + line + "'");
      doc.kind_ = kind;
      header_seen = true;
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("bad document line: '" + line + "'");
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      std::size_t b = s.find_first_not_of(" \t");
      std::size_t e = s.find_last_not_of(" \t");
      s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(value);
    if (key.empty())
      throw std::invalid_argument("bad document line: '" + line + "'");
    doc.fields_.emplace_back(key, value);
  }
  if (!header_seen) throw std::invalid_argument("missing document header");
  return doc;
}

}  // namespace designrank
