#include "report.hpp"

#include <sstream>

#include <json.hpp>

#include "parser.hpp"

namespace signumcalc {

using nlohmann::ordered_json;

std::optional<Format> format_from_name(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "md" || name == "markdown") return Format::Markdown;
  if (name == "text") return Format::Text;
  return std::nullopt;
}

namespace {

std::string dims_text(const std::vector<long>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s;
}

std::string md_cell(std::string s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

bool all_pass(const std::vector<SuiteReport>& reports) {
  for (const auto& r : reports)
    if (!r.all_pass()) return false;
  return true;
}

}  // namespace

std::string render_reports(const std::vector<SuiteReport>& reports, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      ordered_json j;
      j["schema"] = "1";
      j["reports"] = ordered_json::array();
      for (const auto& r : reports) {
        ordered_json suite;
        suite["suite"] = r.suite;
        suite["entries"] = ordered_json::array();
        for (const auto& e : r.entries) {
          ordered_json entry;
          entry["id"] = e.id;
          entry["status"] = e.pass ? "pass" : "fail";
          entry["lhs"] = e.lhs;
          entry["rhs"] = e.rhs;
          entry["dims"] = e.dims;
          entry["seed"] = e.seed;
          if (!e.pass) entry["detail"] = e.detail;
          suite["entries"].push_back(std::move(entry));
        }
        j["reports"].push_back(std::move(suite));
      }
      j["all_pass"] = all_pass(reports);
      os << j.dump(2) << '\n';
      break;
    }
    case Format::Markdown:
      for (const auto& r : reports) {
        os << "### " << r.suite << " (" << r.entries.size() - r.failures() << "/" << r.entries.size()
           << " pass)\n\n";
        os << "| id | status | lhs | rhs | dims | seed |\n|---|---|---|---|---|---|\n";
        for (const auto& e : r.entries)
          os << "| " << e.id << " | " << (e.pass ? "pass" : "fail") << " | " << md_cell(e.lhs) << " | "
             << md_cell(e.rhs) << " | " << dims_text(e.dims) << " | " << e.seed << " |\n";
        os << '\n';
      }
      os << (all_pass(reports) ? "All suites pass.\n" : "Some checks FAILED.\n");
      break;
    case Format::Text:
      for (const auto& r : reports) {
        for (const auto& e : r.entries) {
          os << (e.pass ? "pass " : "FAIL ") << r.suite << '/' << e.id << ": " << e.lhs << " = " << e.rhs;
          if (!e.pass) os << "  [" << e.detail << "]";
          os << '\n';
        }
        os << r.suite << ": " << r.entries.size() - r.failures() << '/' << r.entries.size() << " pass\n";
      }
      os << (all_pass(reports) ? "all pass\n" : "FAILED\n");
      break;
  }
  return os.str();
}

std::string render_prop35_table(unsigned kmax, unsigned lmax, Format format) {
  ordered_json rows = ordered_json::array();
  std::ostringstream md;
  md << "| family | k | ℓ | coefficient | target basis |\n|---|---|---|---|---|\n";
  for (auto f : {Prop35Family::I, Prop35Family::II, Prop35Family::III, Prop35Family::IV}) {
    for (unsigned k = 0; k <= kmax; ++k) {
      for (unsigned l = 0; l <= std::min(k, lmax); ++l) {
        Prop35Entry e = prop35_coefficient(f, k, l);
        std::string target = e.target ? print_basis(dirac_basis(*e.target)) : "0";
        md << "| " << to_string(f) << " | " << k << " | " << l << " | " << e.coefficient.to_string() << " | "
           << target << " |\n";
        ordered_json row;
        row["family"] = to_string(f);
        row["k"] = k;
        row["l"] = l;
        row["coefficient"] = e.coefficient.to_string();
        row["target"] = e.target ? ordered_json(target) : ordered_json(nullptr);
        rows.push_back(std::move(row));
      }
    }
  }
  if (format == Format::Json) {
    ordered_json j;
    j["schema"] = "1";
    j["family"] = "prop35";
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
  }
  if (format == Format::Text) throw Error(ErrorCode::InvalidArgument, "tables are emitted as md or json");
  return md.str();
}

}  // namespace signumcalc
