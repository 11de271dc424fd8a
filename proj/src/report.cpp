#include "ybe/report.hpp"

#include <sstream>

#include <json.hpp>

#include "ybe/group.hpp"
#include "ybe/retract.hpp"

namespace ybe {

bool SolutionReport::consistent() const {
  if (mpl && *mpl == 1 && group_order != "1") return false;
  if (mpl && sol_gcal && *sol_gcal > std::max(*mpl - 1, 0)) return false;
  if (mpl && irretractable_at) return false;
  return true;
}

SolutionReport analyze(const QuadraticSet& q, const AnalyzeOptions& opts) {
  SolutionReport rep;
  rep.n = q.n;
  rep.flags = classify(q);
  rep.lri_derived = q.lri_derived;
  if (!rep.flags.nondegenerate) return rep;

  PermGroup g = yb_group(q);
  rep.orbits = orbits(g).orbits;
  rep.group_order = g.order().to_string();
  rep.group_abelian = g.is_abelian();
  rep.sol_gcal = solvable_length(g);

  if (rep.flags.is_symmetric_set()) {
    RetractTower tower = retract_tower(q, q.n + 1);
    if (tower.status == TowerStatus::terminated)
      rep.mpl = tower.level;
    else if (tower.status == TowerStatus::stabilized)
      rep.irretractable_at = tower.level;
  }
  if (rep.flags.is_square_free_solution() && rep.sol_gcal)
    rep.sol_g = *rep.sol_gcal + 1;
  if (rep.group_abelian) {
    try {
      rep.abelian_invs = abelian_invariants(g, opts.max_group);
    } catch (const std::length_error&) {
      // group too large to enumerate; leave the invariants out
    }
  }
  if (rep.flags.is_square_free_solution() && rep.mpl) {
    for (const auto& cls : retract_class_decomposition(q).classes) {
      SolutionReport::ClassSummary s;
      s.size = static_cast<int>(cls.members.size());
      s.mpl = cls.mpl_of_restriction;
      s.g_invariant = cls.g_invariant;
      rep.retract_classes.push_back(s);
    }
  }
  return rep;
}

namespace {

std::string flag_line(const PropertyFlags& f) {
  std::ostringstream out;
  auto put = [&](const char* name, bool v) {
    out << name << '=' << (v ? "yes" : "no") << ' ';
  };
  put("nondegenerate", f.nondegenerate);
  put("involutive", f.involutive);
  put("braided", f.braided);
  put("square-free", f.square_free);
  put("lri", f.lri);
  out << "cyclic=" << ((f.cl1 && f.cl2 && f.cr1 && f.cr2) ? "yes" : "no");
  return out.str();
}

}  // namespace

std::string report_text(const SolutionReport& rep, const QuadraticSet& q) {
  std::ostringstream out;
  auto labels = q.label_vec();
  out << "n: " << rep.n << "\n";
  out << "flags: " << flag_line(rep.flags) << "\n";
  if (!rep.flags.first_witness.empty()) {
    for (const auto& [name, w] : rep.flags.first_witness) {
      out << "witness " << name << ":";
      for (int v : w) out << ' ' << labels[v];
      out << "\n";
    }
  }
  out << "square-free solution: "
      << (rep.flags.is_square_free_solution() ? "yes" : "no") << "\n";
  if (rep.lri_derived) out << "right action: derived from L (lri)\n";
  if (!rep.orbits.empty()) {
    out << "orbits (" << rep.orbits.size() << "):";
    for (const auto& orbit : rep.orbits) {
      out << " {";
      for (std::size_t i = 0; i < orbit.size(); ++i)
        out << (i ? " " : "") << labels[orbit[i]];
      out << "}";
    }
    out << "\n";
  }
  if (rep.mpl)
    out << "mpl: " << *rep.mpl << "\n";
  else if (rep.irretractable_at)
    out << "mpl: none (irretractable at level " << *rep.irretractable_at
        << ")\n";
  out << "|G|: " << rep.group_order << "\n";
  out << "G abelian: " << (rep.group_abelian ? "yes" : "no") << "\n";
  if (rep.abelian_invs) {
    out << "abelian invariants: [";
    for (std::size_t i = 0; i < rep.abelian_invs->size(); ++i)
      out << (i ? ", " : "") << (*rep.abelian_invs)[i];
    out << "]\n";
  }
  if (rep.sol_gcal) out << "sol(G): " << *rep.sol_gcal << "\n";
  if (rep.sol_g) out << "sol(G(X,r)): " << *rep.sol_g << "\n";
  if (!rep.retract_classes.empty()) {
    out << "retract classes:";
    for (const auto& c : rep.retract_classes) {
      out << " (size " << c.size << ", mpl ";
      if (c.mpl)
        out << *c.mpl;
      else
        out << "-";
      out << ")";
    }
    out << "\n";
  }
  return out.str();
}

std::string report_json(const SolutionReport& rep, const QuadraticSet& q) {
  nlohmann::json j;
  j["schema"] = "ybe-report/1";
  j["n"] = rep.n;
  auto& f = rep.flags;
  j["flags"] = {{"nondegenerate", f.nondegenerate},
                {"involutive", f.involutive},
                {"braided", f.braided},
                {"l1", f.l1},
                {"r1", f.r1},
                {"lr3", f.lr3},
                {"square_free", f.square_free},
                {"lri", f.lri},
                {"cl1", f.cl1},
                {"cl2", f.cl2},
                {"cr1", f.cr1},
                {"cr2", f.cr2}};
  for (const auto& [name, w] : f.first_witness)
    j["witnesses"][name] = w;
  j["square_free_solution"] = f.is_square_free_solution();
  j["lri_derived"] = rep.lri_derived;
  j["labels"] = q.label_vec();
  j["orbits"] = rep.orbits;
  if (rep.mpl)
    j["mpl"] = *rep.mpl;
  else
    j["mpl"] = nullptr;
  if (rep.irretractable_at) j["irretractable_at"] = *rep.irretractable_at;
  j["group_order"] = rep.group_order;
  j["group_abelian"] = rep.group_abelian;
  if (rep.abelian_invs) j["abelian_invariants"] = *rep.abelian_invs;
  if (rep.sol_gcal) j["sol_gcal"] = *rep.sol_gcal;
  if (rep.sol_g) j["sol_g"] = *rep.sol_g;
  auto& classes = j["retract_classes"] = nlohmann::json::array();
  for (const auto& c : rep.retract_classes) {
    nlohmann::json cj;
    cj["size"] = c.size;
    if (c.mpl)
      cj["mpl"] = *c.mpl;
    else
      cj["mpl"] = nullptr;
    cj["g_invariant"] = c.g_invariant;
    classes.push_back(cj);
  }
  return j.dump(2) + "\n";
}

}  // namespace ybe
