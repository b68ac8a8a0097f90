#include "starlike/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <tuple>

#include "starlike/numeric_text.hpp"

namespace starlike {

namespace {

std::string json_escape(const std::string &s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
    case '"': out += "\\\""; break;
    case '\\': out += "\\\\"; break;
    case '\n': out += "\\n"; break;
    default: out.push_back(ch);
    }
  }
  return out;
}

std::string json_number(double x) {
  // JSON has no inf/nan
  if (!std::isfinite(x))
    return "null";
  return format_real(x);
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += "\"\"";
    else
      out.push_back(ch);
  }
  return out + "\"";
}

ReportRow base_row(const ClassParams &p) {
  ReportRow r;
  r.j = p.j();
  r.k = p.k();
  r.A = p.A();
  r.B = p.B();
  return r;
}

} // namespace

std::vector<ReportRow> to_rows(const VerificationReport &report) {
  std::vector<ReportRow> rows;
  for (const auto &c : report.rows) {
    ReportRow r = base_row(report.params);
    r.theorem = theorem_tag(c.theorem, c.t);
    r.check = c.sharpness ? "sharpness" : "bound";
    r.seed = report.seed;
    r.order = report.order;
    r.n_terms = report.n_terms;
    r.partial_sum = c.partial_sum;
    r.bound = c.bound;
    r.ratio = c.ratio;
    r.pass = c.pass;
    r.tail_bound = c.tail_bound;
    r.elapsed = c.elapsed;
    r.note = c.note;
    if (c.skipped && r.note.empty())
      r.note = "skipped";
    rows.push_back(std::move(r));
  }
  return rows;
}

ReportRow to_row(const SharpnessRow &s) {
  ReportRow r = base_row(s.params);
  r.theorem = theorem_tag(Theorem::ThmA);
  r.check = "sharpness";
  r.seed = "identity";
  r.order = s.order;
  r.n_terms = s.n_terms;
  r.partial_sum = s.partial_sum;
  r.bound = s.bound;
  r.ratio = s.partial_sum / s.bound;
  r.pass = s.pass;
  r.tail_bound = s.tail_bound;
  return r;
}

void sort_rows(std::vector<ReportRow> &rows) {
  auto key = [](const ReportRow &r) {
    return std::make_tuple(r.j, r.k, r.A.real(), r.A.imag(), r.B, r.seed,
                           r.theorem, r.check);
  };
  std::stable_sort(rows.begin(), rows.end(),
                   [&](const ReportRow &a, const ReportRow &b) { return key(a) < key(b); });
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_json(std::ostream &os, const ReportMeta &meta,
                const std::vector<ReportRow> &rows) {
  const auto failures = std::count_if(rows.begin(), rows.end(),
                                      [](const ReportRow &r) { return !r.pass; });
  os << "{\n";
  os << "  \"schema\": \"" << kReportSchema << "\",\n";
  os << "  \"command\": \"" << json_escape(meta.command) << "\",\n";
  os << "  \"timestamp\": "
     << (meta.timestamp ? "\"" + json_escape(*meta.timestamp) + "\"" : "null") << ",\n";
  os << "  \"summary\": {\"checks\": " << rows.size() << ", \"failures\": " << failures
     << "},\n";
  os << "  \"rows\": [";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto &r = rows[i];
    os << (i ? ",\n" : "\n") << "    {";
    os << "\"theorem\": \"" << json_escape(r.theorem) << "\", ";
    os << "\"check\": \"" << r.check << "\", ";
    os << "\"params\": {\"j\": " << r.j << ", \"k\": " << r.k
       << ", \"A\": {\"re\": " << json_number(r.A.real())
       << ", \"im\": " << json_number(r.A.imag()) << "}, \"B\": " << json_number(r.B)
       << "}, ";
    os << "\"seed\": \"" << json_escape(r.seed) << "\", ";
    os << "\"N\": " << r.order << ", \"N_d\": " << r.n_terms << ", ";
    os << "\"partial_sum\": " << json_number(r.partial_sum) << ", ";
    os << "\"bound\": " << json_number(r.bound) << ", ";
    os << "\"ratio\": " << json_number(r.ratio) << ", ";
    os << "\"pass\": " << (r.pass ? "true" : "false") << ", ";
    os << "\"tail_bound\": " << (r.tail_bound ? json_number(*r.tail_bound) : "null") << ", ";
    os << "\"elapsed\": " << json_number(meta.timestamp ? r.elapsed : 0.0) << ", ";
    os << "\"note\": \"" << json_escape(r.note) << "\"}";
  }
  os << (rows.empty() ? "]\n" : "\n  ]\n") << "}\n";
}

void write_csv(std::ostream &os, const ReportMeta &meta,
               const std::vector<ReportRow> &rows) {
  os << "theorem,check,j,k,A_re,A_im,B,seed,N,N_d,partial_sum,bound,ratio,pass,"
        "tail_bound,elapsed,note\n";
  for (const auto &r : rows) {
    os << csv_field(r.theorem) << ',' << r.check << ',' << r.j << ',' << r.k << ','
       << format_real(r.A.real()) << ',' << format_real(r.A.imag()) << ','
       << format_real(r.B) << ',' << csv_field(r.seed) << ',' << r.order << ','
       << r.n_terms << ',' << format_real(r.partial_sum) << ','
       << format_real(r.bound) << ',' << format_real(r.ratio) << ','
       << (r.pass ? "true" : "false") << ','
       << (r.tail_bound ? format_real(*r.tail_bound) : "") << ','
       << format_real(meta.timestamp ? r.elapsed : 0.0) << ',' << csv_field(r.note)
       << '\n';
  }
}

} // namespace starlike
