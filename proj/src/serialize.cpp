#include "nichols/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nichols {

using nlohmann::json;

OutputFormat parse_format(const std::string& s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown output format: " + s);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string render_ek_table(const EkTable& t, OutputFormat f) {
  switch (f) {
    case OutputFormat::json: {
      json rows = json::array();
      for (const auto& [ks, count] : t.counts)
        rows.push_back({{"n", t.n},
                        {"k", ks.first},
                        {"s", ks.second},
                        {"count", count}});
      json doc = {{"n", t.n}, {"rows", rows}};
      return doc.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "n,k,s,count\n";
      for (const auto& [ks, count] : t.counts)
        os << t.n << ',' << ks.first << ',' << ks.second << ',' << count
           << "\n";
      return os.str();
    }
    case OutputFormat::text: {
      std::ostringstream os;
      os << "E-table for n = " << t.n << "\n";
      for (const auto& [ks, count] : t.counts)
        os << "  E_{" << ks.first << "," << ks.second << "}^" << t.n << " = "
           << count << "\n";
      return os.str();
    }
  }
  throw std::logic_error("render_ek_table: unknown format");
}

std::string render_orbit_partition(std::size_t n,
                                   const std::vector<OrbitInfo>& parts,
                                   OutputFormat f) {
  switch (f) {
    case OutputFormat::json: {
      json rows = json::array();
      for (const auto& o : parts)
        rows.push_back({{"representative", o.rep.str()},
                        {"size", o.size},
                        {"label", o.label}});
      json doc = {{"n", n}, {"orbits", rows}};
      return doc.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "representative,size,label\n";
      for (const auto& o : parts)
        os << csv_field(o.rep.str()) << ',' << o.size << ','
           << csv_field(o.label) << "\n";
      return os.str();
    }
    case OutputFormat::text: {
      std::ostringstream os;
      os << "orbit partition of {1,2}^" << n << " (" << parts.size()
         << " orbits)\n";
      for (const auto& o : parts) {
        os << "  " << o.rep.str() << "  size " << o.size;
        if (!o.label.empty()) os << "  [" << o.label << "]";
        os << "\n";
      }
      return os.str();
    }
  }
  throw std::logic_error("render_orbit_partition: unknown format");
}

namespace {

json profile_json_object(const GradedProfile& p) {
  json doc = {{"point", p.point},
              {"cap", p.cap},
              {"ranks", p.ranks},
              {"status", p.status == GradedProfile::Status::terminated
                             ? "terminated"
                             : "cap-exceeded"}};
  if (p.total) doc["total"] = *p.total;
  return doc;
}

}  // namespace

std::string render_profile(const GradedProfile& p, OutputFormat f) {
  switch (f) {
    case OutputFormat::json:
      return profile_json_object(p).dump(2) + "\n";
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "degree,rank\n";
      for (std::size_t d = 0; d < p.ranks.size(); ++d)
        os << d << ',' << p.ranks[d] << "\n";
      return os.str();
    }
    case OutputFormat::text: {
      std::ostringstream os;
      os << "graded dimensions at " << p.point << "\n";
      for (std::size_t d = 0; d < p.ranks.size(); ++d)
        os << "  degree " << d << ": " << p.ranks[d] << "\n";
      if (p.status == GradedProfile::Status::terminated) {
        os << "status: terminated (rank 0 reached)\n";
        os << "total dimension: " << *p.total << "\n";
      } else {
        os << "status: cap-exceeded (no zero rank up to degree " << p.cap
           << ")\n";
      }
      return os.str();
    }
  }
  throw std::logic_error("render_profile: unknown format");
}

std::string render_reports(const std::vector<ClosedFormReport>& reports,
                           OutputFormat f) {
  switch (f) {
    case OutputFormat::json: {
      json rows = json::array();
      for (const auto& r : reports)
        rows.push_back({{"name", r.name},
                        {"range", r.range},
                        {"status", r.pass ? "pass" : "fail"},
                        {"advisory", r.advisory},
                        {"detail", r.detail}});
      return rows.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "name,range,status,advisory,detail\n";
      for (const auto& r : reports)
        os << csv_field(r.name) << ',' << csv_field(r.range) << ','
           << (r.pass ? "pass" : "fail") << ','
           << (r.advisory ? "true" : "false") << ',' << csv_field(r.detail)
           << "\n";
      return os.str();
    }
    case OutputFormat::text: {
      std::ostringstream os;
      std::size_t fails = 0;
      for (const auto& r : reports) {
        os << (r.pass ? "  pass " : "  FAIL ") << (r.advisory ? "~" : " ")
           << r.name << "  [" << r.range << "]";
        if (!r.detail.empty()) os << "\n         " << r.detail;
        os << "\n";
        if (!r.pass && !r.advisory) ++fails;
      }
      os << (fails == 0 ? "all checks passed"
                        : std::to_string(fails) + " check(s) failed")
         << " (" << reports.size() << " reports; ~ marks report-only)\n";
      return os.str();
    }
  }
  throw std::logic_error("render_reports: unknown format");
}

std::string render_ftilde(const std::string& x, const std::string& y,
                          const MultiPoly& p, OutputFormat f) {
  switch (f) {
    case OutputFormat::json: {
      json doc = {{"x", x}, {"y", y}, {"polynomial", p.str()}};
      return doc.dump(2) + "\n";
    }
    case OutputFormat::csv:
    case OutputFormat::text: {
      std::ostringstream os;
      os << "F~(" << x << "|" << y << ") = " << p.str() << "\n";
      return os.str();
    }
  }
  throw std::logic_error("render_ftilde: unknown format");
}

std::string render_ftilde_value(const std::string& x, const std::string& y,
                                const std::string& point,
                                const CyclotomicNumber& value,
                                OutputFormat f) {
  switch (f) {
    case OutputFormat::json: {
      json doc = {{"x", x}, {"y", y}, {"point", point}, {"value", value.str()}};
      return doc.dump(2) + "\n";
    }
    case OutputFormat::csv:
    case OutputFormat::text: {
      std::ostringstream os;
      os << "F~(" << x << "|" << y << ") at " << point << " = " << value.str()
         << "\n";
      return os.str();
    }
  }
  throw std::logic_error("render_ftilde_value: unknown format");
}

std::string profile_to_json(const GradedProfile& p) {
  return profile_json_object(p).dump(2) + "\n";
}

GradedProfile profile_from_json(const std::string& text) {
  json doc = json::parse(text);
  GradedProfile p;
  p.point = doc.at("point").get<std::string>();
  p.cap = doc.at("cap").get<std::size_t>();
  p.ranks = doc.at("ranks").get<std::vector<std::size_t>>();
  std::string status = doc.at("status").get<std::string>();
  if (status == "terminated")
    p.status = GradedProfile::Status::terminated;
  else if (status == "cap-exceeded")
    p.status = GradedProfile::Status::cap_exceeded;
  else
    throw std::invalid_argument("profile_from_json: bad status " + status);
  if (doc.contains("total"))
    p.total = doc.at("total").get<unsigned long long>();
  return p;
}

}  // namespace nichols
