#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace designrank {

// Ordered key-value text document used for certificates and audit reports:
//
//   # comments
//   designrank-doc 1 <kind>
//   key = value
//
// Keys are single tokens; values run to end of line. Writing is
// deterministic (insertion order, no timestamps).
class CertDoc {
 public:
  CertDoc() = default;
  explicit CertDoc(std::string kind) : kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, double value);
  void set(const std::string& key, std::size_t value);
  void set(const std::string& key, bool value);

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;  // throws if missing
  std::optional<std::string> find(const std::string& key) const;

  const std::vector<std::pair<std::string, std::string>>& fields() const {
    return fields_;
  }

  void write(std::ostream& out,
             const std::vector<std::string>& banner = {}) const;
  static CertDoc read(std::istream& in);

 private:
  std::string kind_;
  std::vector<std::pair<std::string, std::string>> fields_;
};

}  // namespace designrank
