#pragma once

#include "alphag/theorem.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace alphag {

enum class OutputFormat { text, json, csv };

namespace detail {

// Center coset first, the rest in a label-independent order so that
// relabeled copies of one group render identically.
inline std::vector<const CosetFinding*> canonical_cosets(const PerCosetFindings& p) {
  std::vector<const CosetFinding*> out;
  for (const auto& c : p.per_coset) out.push_back(&c);
  if (out.size() > 1)
    std::sort(out.begin() + 1, out.end(), [](const CosetFinding* a, const CosetFinding* b) {
      return std::tuple(a->k, a->coset_sum, a->order_identity_ok, a->divisibility_ok, a->coset_inequality_ok) <
             std::tuple(b->k, b->coset_sum, b->order_identity_ok, b->divisibility_ok, b->coset_inequality_ok);
    });
  return out;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace detail

inline nlohmann::ordered_json report_json(const AlphaReport& r) {
  nlohmann::ordered_json j;
  j["label"] = r.label;
  j["order"] = r.order;
  j["cyclic_count"] = r.cyclic_count;
  j["alpha_g"] = r.alpha_g.str();
  j["center_order"] = r.center_order;
  j["alpha_z"] = r.alpha_z.str();
  j["inequality"] = r.inequality_holds;
  j["equality"] = r.equality_holds;
  j["structural"] = r.structural_holds;
  j["quotient_exponent"] = r.quotient_exponent;
  j["two_central"] = r.two_central;
  j["four_abelian"] = r.four_abelian;
  j["avg_order_g"] = r.avg_order_g.str();
  j["avg_order_z"] = r.avg_order_z.str();
  j["avg_inequality"] = r.avg_inequality_holds;
  auto steps = nlohmann::ordered_json::array();
  for (const CosetFinding* c : detail::canonical_cosets(r.proof_steps)) {
    nlohmann::ordered_json s;
    s["k"] = c->k;
    s["coset_sum"] = c->coset_sum.str();
    s["order_identity"] = c->order_identity_ok;
    s["divisibility"] = c->divisibility_ok;
    s["coset_inequality"] = c->coset_inequality_ok;
    steps.push_back(std::move(s));
  }
  j["proof_steps"] = std::move(steps);
  auto findings = nlohmann::ordered_json::array();
  for (const Finding& f : r.counterexamples) {
    nlohmann::ordered_json o;
    o["check"] = f.check;
    o["detail"] = f.detail;
    o["witness"] = f.witness;
    findings.push_back(std::move(o));
  }
  j["counterexamples"] = std::move(findings);
  return j;
}

inline const char* csv_header() {
  return "label,order,cyclic_count,alpha_g,center_order,alpha_z,inequality,equality,structural,"
         "quotient_exponent,two_central,four_abelian,avg_order_g,avg_order_z,avg_inequality,"
         "cosets,coset_k,proof_steps_ok,counterexamples";
}

/// One CSV row matching csv_header(). `coset_k` lists the minimal orders of
/// all cosets, center first, separated by ';'.
inline std::string report_csv_row(const AlphaReport& r) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::string ks;
  bool steps_ok = true;
  for (const CosetFinding* c : detail::canonical_cosets(r.proof_steps)) {
    if (!ks.empty()) ks += ';';
    ks += std::to_string(c->k);
    steps_ok = steps_ok && c->all_ok();
  }
  std::ostringstream os;
  os << detail::csv_field(r.label) << ',' << r.order << ',' << r.cyclic_count << ',' << r.alpha_g << ','
     << r.center_order << ',' << r.alpha_z << ',' << b(r.inequality_holds) << ',' << b(r.equality_holds) << ','
     << b(r.structural_holds) << ',' << r.quotient_exponent << ',' << b(r.two_central) << ','
     << b(r.four_abelian) << ',' << r.avg_order_g << ',' << r.avg_order_z << ',' << b(r.avg_inequality_holds)
     << ',' << r.proof_steps.m << ',' << ks << ',' << b(steps_ok) << ',' << r.counterexamples.size();
  return os.str();
}

inline std::string report_text(const AlphaReport& r) {
  std::ostringstream os;
  os << "group                 " << r.label << '\n'
     << "order                 " << r.order << '\n'
     << "cyclic subgroups      " << r.cyclic_count << '\n'
     << "alpha(G)              " << r.alpha_g << "  (approx " << r.alpha_g.decimal() << ")\n"
     << "center order          " << r.center_order << '\n'
     << "alpha(Z(G))           " << r.alpha_z << "  (approx " << r.alpha_z.decimal() << ")\n"
     << "alpha(G) <= alpha(Z)  " << detail::yes_no(r.inequality_holds) << '\n'
     << "equality              " << detail::yes_no(r.equality_holds) << '\n'
     << "structural condition  " << detail::yes_no(r.structural_holds) << '\n'
     << "exp(G/Z(G))           " << r.quotient_exponent << '\n'
     << "2-central             " << detail::yes_no(r.two_central) << '\n'
     << "4-abelian             " << detail::yes_no(r.four_abelian) << '\n'
     << "o(G)                  " << r.avg_order_g << "  (approx " << r.avg_order_g.decimal() << ")\n"
     << "o(Z(G))               " << r.avg_order_z << "  (approx " << r.avg_order_z.decimal() << ")\n"
     << "o(G) >= o(Z(G))       " << detail::yes_no(r.avg_inequality_holds) << '\n'
     << "cosets of Z(G)        " << r.proof_steps.m << " (center sum " << r.proof_steps.center_sum << ")\n";
  for (const CosetFinding& c : r.proof_steps.per_coset)
    os << "  coset " << c.coset_index << ": y = " << c.y << ", k = " << c.k << ", sum = " << c.coset_sum
       << (c.all_ok() ? "" : "  [FAILED]") << '\n';
  if (r.counterexamples.empty()) {
    os << "counterexamples       none\n";
  } else {
    os << "counterexamples       " << r.counterexamples.size() << '\n';
    for (const Finding& f : r.counterexamples) {
      os << "  [" << f.check << "] " << f.detail;
      if (!f.witness.empty()) {
        os << "  witness:";
        for (auto w : f.witness) os << ' ' << w;
      }
      os << '\n';
    }
  }
  return os.str();
}

inline std::string render_report(const AlphaReport& r, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return report_json(r).dump() + "\n";
    case OutputFormat::csv: return std::string(csv_header()) + "\n" + report_csv_row(r) + "\n";
    case OutputFormat::text: return report_text(r);
  }
  return {};
}

}  // namespace alphag
