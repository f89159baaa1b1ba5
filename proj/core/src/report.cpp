#include "mmpair/report.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace mmpair {

using nlohmann::ordered_json;

std::string report_to_json(const IdentityReport& r) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : r.entries) {
    ordered_json j;
    j["id"] = e.id;
    j["anchor"] = e.anchor;
    j["status"] = to_string(e.status);
    const Witness* w = e.failures.empty() ? nullptr : &e.failures.front();
    j["witness"] = w ? ordered_json(w->tuple) : ordered_json(nullptr);
    j["residual"] = (w && !w->residual.empty()) ? ordered_json(to_strings(w->residual)) : ordered_json(nullptr);
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string format_element(const Vector& v, const Algebra& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    const Rational& c = v[i];
    if (first)
      os << (sgn(c) < 0 ? "-" : "");
    else
      os << (sgn(c) < 0 ? " - " : " + ");
    const Rational mag = abs(c);
    if (mag != 1) os << to_string(mag) << '*';
    os << a.basis_label(i);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string format_tuple(const std::vector<std::size_t>& t, const Algebra& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << a.basis_label(t[i]);
  os << ')';
  return os.str();
}

std::string report_to_text(const IdentityReport& r, const Algebra& m, const Algebra& l, std::size_t witness_limit) {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& e : r.entries) width = std::max(width, e.id.size());
  for (const auto& e : r.entries) {
    std::string status = to_string(e.status);
    for (auto& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    os << status << std::string(8 - status.size(), ' ') << e.id << std::string(width - e.id.size() + 2, ' ')
       << e.anchor << (e.gating ? "" : "  [informational]") << '\n';
    std::size_t shown = 0;
    for (const auto& w : e.failures) {
      if (witness_limit != 0 && shown++ >= witness_limit) break;
      os << "        " << w.relation;
      if (!w.tuple.empty()) {
        const bool structural = w.relation.starts_with("ORBIT") || w.relation.starts_with("Y-TRI");
        os << " at ";
        if (structural) {
          os << "element " << w.tuple[0];
          if (w.tuple.size() == 3) os << ", pair (" << m.basis_label(w.tuple[1]) << ", " << m.basis_label(w.tuple[2]) << ')';
        } else {
          os << format_tuple(w.tuple, m);
        }
      }
      if (!w.residual.empty()) os << ": residual " << format_element(w.residual, l);
      os << '\n';
    }
  }
  return os.str();
}

} // namespace mmpair
