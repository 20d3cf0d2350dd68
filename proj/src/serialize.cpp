#include "thinlie/serialize.hpp"

#include <iomanip>
#include <sstream>

namespace thinlie {

using nlohmann::json;

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Vec vec_from_json(const json& j, const PrimeField& f) {
  if (!j.is_array()) throw FormatError("expected a coefficient array");
  Vec v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw FormatError("coefficients must be integers");
    v(static_cast<Index>(i)) = f.reduce(j[i].get<std::int64_t>());
  }
  return v;
}

json algebra_to_json(const GradedAlgebra& alg) {
  json comps = json::array();
  for (int d = 1; d <= alg.max_degree(); ++d) {
    const Component& c = alg.component(d);
    json labels = json::array();
    for (const auto& l : c.labels)
      labels.push_back({{"parent", vec_to_json(l.parent)}, {"letter", std::string(1, to_char(l.letter))}});
    json action = json::array();
    if (d < alg.max_degree())
      for (Index i = 0; i < c.dim(); ++i)
        action.push_back({vec_to_json(alg.action(d, i, Letter::X)), vec_to_json(alg.action(d, i, Letter::Y))});
    comps.push_back({{"degree", d},
                     {"dim", c.dim()},
                     {"labels", labels},
                     {"action", action},
                     {"relators_imposed", c.relators_imposed}});
  }
  return {{"schema", kAlgebraSchema},
          {"p", alg.field().modulus()},
          {"max_degree", alg.max_degree()},
          {"components", comps}};
}

GradedAlgebra algebra_from_json(const json& j) {
  try {
    if (j.at("schema") != kAlgebraSchema)
      throw FormatError("unsupported algebra schema " + j.at("schema").dump());
    const PrimeField f(j.at("p").get<std::uint32_t>());
    const int top = j.at("max_degree").get<int>();
    const auto& comps = j.at("components");
    if (static_cast<int>(comps.size()) != top) throw FormatError("component count differs from max_degree");
    std::vector<Component> out;
    for (int d = 1; d <= top; ++d) {
      const json& jc = comps[d - 1];
      if (jc.at("degree").get<int>() != d) throw FormatError("components out of order");
      Component c;
      for (const auto& l : jc.at("labels")) {
        const std::string letter = l.at("letter").get<std::string>();
        if (letter != "x" && letter != "y") throw FormatError("label letter must be x or y");
        c.labels.push_back({vec_from_json(l.at("parent"), f), letter == "x" ? Letter::X : Letter::Y});
      }
      for (const auto& pair : jc.at("action")) {
        if (pair.size() != 2) throw FormatError("action entries are [x-image, y-image] pairs");
        c.action.push_back(vec_from_json(pair[0], f));
        c.action.push_back(vec_from_json(pair[1], f));
      }
      if (jc.contains("relators_imposed")) c.relators_imposed = jc["relators_imposed"].get<std::vector<int>>();
      out.push_back(std::move(c));
    }
    // shape checks before deriving structure constants
    for (int d = 1; d <= top; ++d) {
      const Component& c = out[d - 1];
      const Index next = d < top ? out[d].dim() : 0;
      if (d < top && static_cast<Index>(c.action.size()) != 2 * c.dim())
        throw FormatError("action table of degree " + std::to_string(d) + " is incomplete");
      for (const auto& v : c.action)
        if (v.size() != next) throw FormatError("action image of wrong length in degree " + std::to_string(d));
      for (const auto& l : c.labels)
        if (l.parent.size() != (d == 1 ? 0 : out[d - 2].dim()))
          throw FormatError("label parent of wrong length in degree " + std::to_string(d));
    }
    if (out.empty() || out[0].dim() != 2) throw FormatError("degree one must have dimension 2");
    return GradedAlgebra(f, std::move(out));
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed algebra document: ") + e.what());
  } catch (const FieldError& e) {
    throw FormatError(std::string("malformed algebra document: ") + e.what());
  }
}

std::string describe_subspace(const std::vector<Vec>& basis) {
  if (basis.empty()) return "0";
  if (basis.size() >= 2) return "L_1";
  const Vec& v = basis.front();
  std::string s;
  const char names[2] = {'x', 'y'};
  for (Index i = 0; i < 2; ++i) {
    if (v(i) == 0) continue;
    if (!s.empty()) s += " + ";
    if (v(i) != 1) s += std::to_string(v(i));
    s += names[i];
  }
  return "<" + s + ">";
}

json report_to_json(const ThinReport& rep, const PrimeField& f) {
  json records = json::array();
  for (const auto& r : rep.records) {
    json jr = {{"degree", r.degree}, {"dim", r.dim}, {"kind", to_string(r.kind)}};
    jr["lambda"] = r.lambda ? json(*r.lambda) : json(nullptr);
    jr["witness_w"] = r.witness_w ? vec_to_json(r.witness_w->coeffs) : json(nullptr);
    jr["note"] = r.note;
    records.push_back(jr);
  }
  json cents = json::array();
  for (const auto& c : rep.centralizers) {
    json basis = json::array();
    for (const auto& v : c.basis) basis.push_back(vec_to_json(v));
    cents.push_back({{"degree", c.degree},
                     {"dim", c.basis.size()},
                     {"basis", basis},
                     {"description", describe_subspace(c.basis)}});
  }
  json j = {{"schema", kReportSchema},
            {"p", f.modulus()},
            {"max_degree", rep.max_degree},
            {"q", rep.q ? json(*rep.q) : json(nullptr)},
            {"normalized", rep.normalized},
            {"generators", {{"x", vec_to_json(rep.generators.x)}, {"y", vec_to_json(rep.generators.y)}}},
            {"dims", rep.dims},
            {"covering_ok_upto", rep.covering_ok_upto},
            {"covering_sampled", rep.covering_sampled},
            {"collapse_degree", rep.collapse_degree ? json(*rep.collapse_degree) : json(nullptr)},
            {"records", records},
            {"centralizers", cents},
            {"diamond_degrees", rep.diamond_degrees},
            {"diamond_distances", rep.diamond_distances},
            {"findings", rep.findings},
            {"structural_findings", rep.has_structural_findings}};
  return j;
}

namespace {
std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}
}  // namespace

std::string report_to_text(const ThinReport& rep, const PrimeField& f) {
  std::ostringstream out;
  out << "p = " << f.modulus() << ", q = " << (rep.q ? std::to_string(*rep.q) : "unknown")
      << ", degrees 1.." << rep.max_degree << '\n';
  out << "generators: x = " << describe_subspace({rep.generators.x}) << ", y = "
      << describe_subspace({rep.generators.y}) << (rep.normalized ? "" : " (not normalized)") << '\n';
  std::vector<int> dims(rep.dims.begin(), rep.dims.end());
  out << "dims: " << join(dims) << '\n';
  out << "covering holds through degree " << rep.covering_ok_upto
      << (rep.covering_sampled ? " (sampled)" : "") << '\n';
  out << "collapse degree: " << (rep.collapse_degree ? std::to_string(*rep.collapse_degree) : "none within range")
      << '\n';
  out << "diamond degrees: " << join(rep.diamond_degrees) << '\n';
  out << "diamond distances: " << join(rep.diamond_distances) << '\n';
  out << '\n' << std::left << std::setw(8) << "degree" << std::setw(5) << "dim" << std::setw(24) << "kind"
      << std::setw(8) << "type" << std::setw(14) << "C_L1(L_k)" << "witness w" << '\n';
  for (int d = 1; d <= rep.max_degree; ++d) {
    const DiamondRecord* rec = nullptr;
    for (const auto& r : rep.records)
      if (r.degree == d) rec = &r;
    const CentralizerInfo* cen = nullptr;
    for (const auto& c : rep.centralizers)
      if (c.degree == d) cen = &c;
    std::string kind = rec ? to_string(rec->kind) : (d == 1 ? "first diamond" : "-");
    std::string type = "-";
    if (rec && rec->kind == DiamondKind::GenuineFinite) type = std::to_string(*rec->lambda);
    if (rec && rec->kind == DiamondKind::GenuineInfinite) type = "inf";
    if (rec && rec->kind == DiamondKind::Fake) type = "0";
    std::string witness = "-";
    if (rec && rec->witness_w) {
      witness.clear();
      for (Index i = 0; i < rec->witness_w->coeffs.size(); ++i)
        witness += (i ? " " : "") + std::to_string(rec->witness_w->coeffs(i));
    }
    out << std::setw(8) << d << std::setw(5) << rep.dims[d - 1] << std::setw(24) << kind << std::setw(8)
        << type << std::setw(14) << (cen ? describe_subspace(cen->basis) : "-") << witness;
    if (rec && !rec->note.empty()) out << "  (" << rec->note << ")";
    out << '\n';
  }
  if (!rep.findings.empty()) {
    out << "\nfindings" << (rep.has_structural_findings ? " (structural)" : "") << ":\n";
    for (const auto& s : rep.findings) out << "  - " << s << '\n';
  }
  return out.str();
}

}  // namespace thinlie
