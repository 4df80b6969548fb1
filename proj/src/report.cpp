#include "mostar/report.hpp"

#include <sstream>

namespace mostar::report {

using nlohmann::json;

namespace {

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json cell_json(const verify::TheoremCell& cell) {
  json j;
  j["n"] = cell.n;
  j["k"] = cell.k;
  if (cell.mu) j["mu"] = *cell.mu;
  j["empty"] = cell.empty();
  j["class_size_labeled"] = cell.class_size_labeled;
  j["bound"] = cell.bound;
  if (!cell.empty()) {
    j["truth"] = *cell.truth;
    j["optimal_labeled"] = cell.optimal_labeled;
    j["witnesses"] = cell.witnesses;
    j["truth_equals_bound"] = *cell.truth == cell.bound;
  }
  if (cell.family_graph) {
    j["family_graph"] = *cell.family_graph;
    j["family_mo"] = *cell.family_mo;
  }
  json checks = json::object();
  for (const auto& [name, ok] : cell.checks) checks[name] = ok;
  j["checks"] = checks;
  j["notes"] = cell.notes;
  return j;
}

json subclaim_json(const verify::SubclaimVerdict& s) {
  json j;
  j["name"] = s.name;
  j["statement"] = s.statement;
  j["status"] = verify::to_string(s.status);
  j["cells_checked"] = s.cells_checked;
  j["sites_checked"] = s.sites_checked;
  j["violations"] = s.violations;
  j["ties"] = s.ties;
  j["counterexamples"] = json::array();
  for (const auto& rec : s.counterexamples) j["counterexamples"].push_back(to_json(rec));
  return j;
}

}  // namespace

json to_json(const verify::CounterexampleRecord& rec) {
  json j;
  j["kind"] = rec.kind;
  j["graphs"] = rec.graphs;
  j["mostar"] = rec.mostar;
  j["cut_edges"] = rec.cut_edges;
  j["n"] = rec.n;
  j["k"] = rec.k;
  j["mu"] = rec.mu;
  if (rec.edge) j["edge"] = edge_json(*rec.edge);
  if (rec.n_u) j["n_u"] = *rec.n_u;
  if (rec.n_v) j["n_v"] = *rec.n_v;
  if (rec.equidistant) j["equidistant"] = *rec.equidistant;
  if (rec.imbalance) j["imbalance"] = *rec.imbalance;
  if (!rec.site.empty()) j["site"] = rec.site;
  if (rec.claimed_value) j["claimed_value"] = *rec.claimed_value;
  j["relation"] = rec.relation;
  j["note"] = rec.note;
  return j;
}

json to_json(const verify::ClaimVerdict& v) {
  json j;
  j["claim"] = verify::to_string(v.claim);
  j["statement"] = v.statement;
  j["scope"] = v.scope;
  j["status"] = verify::to_string(v.status);
  j["stats"] = {{"cells_checked", v.cells_checked}, {"sites_checked", v.sites_checked}, {"violations", v.violations}};
  j["subclaims"] = json::array();
  for (const auto& s : v.subclaims) j["subclaims"].push_back(subclaim_json(s));
  if (!v.cells.empty()) {
    j["cells"] = json::array();
    for (const auto& c : v.cells) j["cells"].push_back(cell_json(c));
  }
  return j;
}

json to_json(const verify::VerificationReport& report) {
  json j;
  j["tool"] = {{"name", report.tool}, {"version", report.version}};
  json claims = json::array();
  for (auto id : report.claims) claims.push_back(verify::to_string(id));
  j["config"] = {{"max_n", report.max_n}, {"claims", claims}};
  j["claims"] = json::array();
  for (const auto& v : report.verdicts) j["claims"].push_back(to_json(v));
  return j;
}

json to_json(const enumerate::ExtremalResult& r) {
  json j;
  j["objective"] = enumerate::to_string(r.objective);
  j["n"] = r.filter.n;
  if (r.filter.cut_edges) j["k"] = *r.filter.cut_edges;
  if (r.filter.cyclomatic) j["mu"] = *r.filter.cyclomatic;
  j["class_size_labeled"] = r.class_size_labeled;
  j["empty"] = r.empty();
  if (r.value) j["value"] = *r.value;
  j["optimal_labeled"] = r.optimal_labeled;
  j["witnesses"] = r.witnesses;
  return j;
}

json to_json(const EdgeContribution& c) {
  return {{"edge", edge_json(c.edge)},
          {"n_u", c.n_u},
          {"n_v", c.n_v},
          {"equidistant", c.equidistant},
          {"imbalance", c.imbalance}};
}

std::string render_machine(const verify::VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

std::string render_table(const verify::VerificationReport& report) {
  std::ostringstream out;
  out << "# " << report.tool << " " << report.version << " verification report\n\n";
  out << "max_n = " << report.max_n << "\n\n";
  out << "| claim | status | cells | sites | violations |\n|---|---|---|---|---|\n";
  for (const auto& v : report.verdicts) {
    out << "| " << verify::to_string(v.claim) << " | " << verify::to_string(v.status) << " | " << v.cells_checked
        << " | " << v.sites_checked << " | " << v.violations << " |\n";
  }
  for (const auto& v : report.verdicts) {
    out << "\n## " << verify::to_string(v.claim) << ": " << verify::to_string(v.status) << "\n\n";
    out << v.statement << "\n\nScope: " << v.scope << "\n\n";
    out << "| sub-claim | status | cells | sites | violations | ties |\n|---|---|---|---|---|---|\n";
    for (const auto& s : v.subclaims) {
      out << "| " << s.name << " | " << verify::to_string(s.status) << " | " << s.cells_checked << " | "
          << s.sites_checked << " | " << s.violations << " | " << s.ties << " |\n";
    }
    if (!v.cells.empty()) {
      out << "\n| n | k | mu | labeled | truth | bound | witnesses | family Mo | failed checks | notes |\n"
          << "|---|---|---|---|---|---|---|---|---|---|\n";
      for (const auto& c : v.cells) {
        std::string failed;
        for (const auto& [name, ok] : c.checks) {
          if (!ok) failed += (failed.empty() ? "" : ", ") + name;
        }
        std::string notes;
        for (const auto& note : c.notes) notes += (notes.empty() ? "" : "; ") + note;
        std::string witnesses;
        for (const auto& w : c.witnesses) witnesses += (witnesses.empty() ? "`" : " `") + w + "`";
        out << "| " << c.n << " | " << c.k << " | " << (c.mu ? std::to_string(*c.mu) : "-") << " | "
            << c.class_size_labeled << " | " << (c.truth ? std::to_string(*c.truth) : "EMPTY") << " | " << c.bound
            << " | " << witnesses << " | " << (c.family_mo ? std::to_string(*c.family_mo) : "-") << " | " << failed
            << " | " << notes << " |\n";
      }
    }
    const auto records = v.counterexamples();
    if (!records.empty()) {
      out << "\nCounterexamples (first per cell):\n\n";
      for (const auto* rec : records) {
        out << "- [" << rec->kind << "] (n=" << rec->n << ", k=" << rec->k << ", mu=" << rec->mu << ")";
        for (std::size_t i = 0; i < rec->graphs.size(); ++i) {
          out << (i == 0 ? " " : " -> ") << "`" << rec->graphs[i] << "` Mo=" << rec->mostar[i];
        }
        out << "; expected " << rec->relation;
        if (rec->claimed_value) out << " (bound " << *rec->claimed_value << ")";
        if (!rec->note.empty()) out << "; " << rec->note;
        out << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace mostar::report
