#include "cayleylab/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cayleylab/version.hpp"

namespace cayleylab::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kJsonIntLimit = 1ull << 53;

// Exact integers stay JSON numbers while they fit a double exactly; larger
// integers and all non-integer rationals become strings.
ordered_json witness_value(const BigRat& v) {
  if (is_integer(v)) {
    const BigInt num = boost::multiprecision::numerator(v);
    if (boost::multiprecision::abs(num) < kJsonIntLimit)
      return ordered_json(num.convert_to<std::int64_t>());
    return ordered_json(num.str());
  }
  return ordered_json(rational_to_string(v));
}

ordered_json report_json(const verifier::ClaimReport& report) {
  ordered_json j;
  j["tool-version"] = kToolVersion;
  j["claim"] = verifier::claim_name(report.claim);
  j["instance"] = ordered_json{{"group", report.group_id}, {"gens", report.gens_label}};
  j["pass"] = report.pass;
  ordered_json w = ordered_json::object();
  for (const auto& [name, value] : report.witnesses) w[name] = witness_value(value);
  j["witnesses"] = std::move(w);
  j["notes"] = report.notes;
  return j;
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string report_text(const verifier::ClaimReport& report) {
  std::ostringstream out;
  out << (report.pass ? "PASS" : "FAIL") << ' ' << verifier::claim_name(report.claim) << ' '
      << report.group_id;
  if (!report.gens_label.empty()) out << " [" << report.gens_label << ']';
  for (const auto& [name, value] : report.witnesses)
    out << ' ' << name << '=' << rational_to_string(value);
  if (!report.notes.empty()) out << "  # " << report.notes;
  out << '\n';
  return out.str();
}

std::string report_csv_row(const verifier::ClaimReport& report) {
  std::ostringstream out;
  out << verifier::claim_name(report.claim) << ',' << report.group_id << ','
      << report.gens_label << ',' << (report.pass ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace

std::string serialize_report(const verifier::ClaimReport& report, Format format) {
  switch (format) {
    case Format::json: return report_json(report).dump(2) + "\n";
    case Format::csv: return "claim,group,gens,pass\n" + report_csv_row(report);
    case Format::text: return report_text(report);
  }
  return {};
}

std::string serialize_reports(const std::vector<verifier::ClaimReport>& reports,
                              Format format) {
  switch (format) {
    case Format::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      return arr.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = "claim,group,gens,pass\n";
      for (const auto& r : reports) out += report_csv_row(r);
      return out;
    }
    case Format::text: {
      std::string out;
      std::size_t failures = 0;
      for (const auto& r : reports) {
        out += report_text(r);
        if (!r.pass) ++failures;
      }
      out += std::to_string(reports.size()) + " checks, " + std::to_string(failures) +
             " failures\n";
      return out;
    }
  }
  return {};
}

std::string serialize_scaling(const verifier::ScalingTable& table, Format format) {
  switch (format) {
    case Format::csv:
    case Format::text: {
      std::string out = "param,order,diameter,log_order,fit_exponent\n";
      for (const auto& row : table.rows) {
        out += std::to_string(row.parameter) + "," + std::to_string(row.group_order) + "," +
               std::to_string(row.diameter) + "," + fmt_double(row.log_order) + "," +
               fmt_double(row.fit_exponent) + "\n";
      }
      if (format == Format::text)
        for (const auto& [name, value] : table.extras)
          out += "# " + name + " = " + fmt_double(value) + "\n";
      return out;
    }
    case Format::json: {
      ordered_json j;
      j["tool-version"] = kToolVersion;
      j["family"] = verifier::scaling_family_name(table.family);
      ordered_json rows = ordered_json::array();
      for (const auto& row : table.rows)
        rows.push_back(ordered_json{{"param", row.parameter},
                                    {"order", row.group_order},
                                    {"diameter", row.diameter},
                                    {"log_order", row.log_order},
                                    {"fit_exponent", row.fit_exponent}});
      j["rows"] = std::move(rows);
      j["fit_exponent"] = table.fit_exponent;
      for (const auto& [name, value] : table.extras) j[name] = value;
      return j.dump(2) + "\n";
    }
  }
  return {};
}

std::string serialize_ball_profile(const std::string& group_id, const std::string& gens_label,
                                   const cayley::BallProfile& profile, Format format) {
  switch (format) {
    case Format::json: {
      ordered_json j;
      j["tool-version"] = kToolVersion;
      j["instance"] = ordered_json{{"group", group_id}, {"gens", gens_label}};
      j["sizes"] = profile.sizes;
      j["generates"] = profile.generates;
      if (profile.generates)
        j["diameter"] = profile.stabilization_index();
      else
        j["diameter"] = "INFINITE";
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = "level,ball_size\n";
      for (std::size_t i = 0; i < profile.sizes.size(); ++i)
        out += std::to_string(i) + "," + std::to_string(profile.sizes[i]) + "\n";
      return out;
    }
    case Format::text: {
      std::ostringstream out;
      if (profile.generates)
        out << profile.stabilization_index() << '\n';
      else
        out << "INFINITE\n";
      return out.str();
    }
  }
  return {};
}

std::string serialize_power_profile(const std::string& group_id, const std::string& gens_label,
                                    const cayley::PowerProfile& profile, Format format) {
  switch (format) {
    case Format::json: {
      ordered_json j;
      j["tool-version"] = kToolVersion;
      j["instance"] = ordered_json{{"group", group_id}, {"gens", gens_label}};
      j["sizes"] = profile.sizes;
      j["cap_hit"] = profile.cap_hit;
      return j.dump(2) + "\n";
    }
    case Format::csv: {
      std::string out = "n,power_size\n";
      for (std::size_t i = 0; i < profile.sizes.size(); ++i)
        out += std::to_string(i + 1) + "," + std::to_string(profile.sizes[i]) + "\n";
      return out;
    }
    case Format::text: {
      std::ostringstream out;
      out << "|S^n| for n = 1..";
      out << profile.sizes.size() << ':';
      for (auto s : profile.sizes) out << ' ' << s;
      if (profile.cap_hit) out << " (cap hit)";
      out << '\n';
      return out.str();
    }
  }
  return {};
}

}  // namespace cayleylab::cli
