#ifndef SMASHFRAME_EMIT_HPP
#define SMASHFRAME_EMIT_HPP

// Serialization of the computed structures: an ordered JSON document, DOT
// graphs (Hasse diagrams and specialization diagrams), and the fixed-format
// text summaries. All output is deterministic: identical inputs produce
// byte-identical bytes.

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "smashframe/frame.hpp"
#include "smashframe/literals.hpp"
#include "smashframe/ring_model.hpp"
#include "smashframe/spectra.hpp"

namespace smashframe {

using ordered_json = nlohmann::ordered_json;

inline ordered_json json_spec(const RingSpec& s) {
  return ordered_json{{"n", s.n}, {"idem", mask_string(s)}, {"ell", s.ell}};
}

inline ordered_json json_elements(const Frame& f) {
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    const Chain& x = f.elements[i];
    arr.push_back(ordered_json{{"id", static_cast<int>(i)},
                               {"chain", format_chain(x)},
                               {"label", epi_label(f.spec, x)},
                               {"compact", is_compactly_generated(x)}});
  }
  return arr;
}

inline ordered_json json_pairs(const std::vector<std::pair<int, int>>& edges) {
  ordered_json arr = ordered_json::array();
  for (const auto& [a, b] : edges) arr.push_back(ordered_json::array({a, b}));
  return arr;
}

inline ordered_json json_counts(const RingSpec& s) {
  ordered_json c;
  c["total"] = count_all(s);
  c["by_size"] = count_histogram(s);
  c["point_formula"] = point_count_formula(s);
  return c;
}

inline ordered_json json_dimension(const RingSpec& s, const Frame& f, const SpectralSpace& sp) {
  NextProfile p = next_profile(s);
  ordered_json d;
  d["M"] = p.M;
  d["d"] = p.d;
  d["next"] = p.next;
  d["next0"] = p.next0;
  d["longest_chain"] = spectrum_dimension(f, sp);
  return d;
}

inline ordered_json json_balmer(const BalmerSpace& b) {
  ordered_json j;
  j["points"] = b.point_count;
  j["thick_ideals"] = b.thick_count;
  j["specialization"] = json_pairs(b.specialization);
  j["specialization_hasse"] = json_pairs(b.reduction);
  return j;
}

inline ordered_json json_spectrum(const Frame& f, const SpectralSpace& sp) {
  ordered_json j;
  ordered_json pts = ordered_json::array();
  for (int p : sp.points) {
    const Chain& x = f.elements[static_cast<std::size_t>(p)];
    pts.push_back(ordered_json{{"id", p},
                               {"chain", format_chain(x)},
                               {"label", epi_label(f.spec, x)}});
  }
  j["points"] = pts;
  j["specialization"] = json_pairs(sp.specialization);
  j["specialization_hasse"] = json_pairs(sp.reduction);
  j["closed_points"] = sp.closed_points;
  j["open_points"] = sp.open_points;
  return j;
}

inline ordered_json json_comparison(const ComparisonMap& cm, const TelescopeVerdict& tv) {
  ordered_json j;
  j["assignment"] = json_pairs(cm.assignment);
  j["bijective"] = cm.bijective;
  j["telescope"] = ordered_json{{"holds", tv.holds}, {"witness", tv.witness}};
  return j;
}

inline ordered_json full_document(const Frame& f) {
  SpectralSpace sp = smashing_spectrum(f);
  TelescopeVerdict tv = telescope_holds(f.spec);
  ComparisonMap cm = comparison_map(f, sp);
  ordered_json doc;
  doc["spec"] = json_spec(f.spec);
  doc["counts"] = json_counts(f.spec);
  doc["elements"] = json_elements(f);
  doc["covers"] = json_pairs(f.cover_edges());
  doc["spectrum"] = json_spectrum(f, sp);
  doc["balmer"] = json_balmer(balmer_dual(f.spec));
  doc["comparison"] = json_comparison(cm, tv);
  doc["dimension"] = json_dimension(f.spec, f, sp);
  return doc;
}

// --- DOT -----------------------------------------------------------------

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline std::string dot_quote(const std::string& s) { return "\"" + dot_escape(s) + "\""; }

// Two-line node label: the parts are escaped, the separator stays the DOT
// line-break sequence.
inline std::string dot_two_line(const std::string& a, const std::string& b) {
  return "\"" + dot_escape(a) + "\\n" + dot_escape(b) + "\"";
}

}  // namespace detail

// Hasse diagram: edge u -> v means v covers u; the frame bottom sits at the
// bottom of the drawing (rank direction BT), unless flipped for display.
inline std::string dot_hasse(const Frame& f, bool flip = false) {
  std::string out = "digraph hasse {\n";
  out += std::string("  rankdir=") + (flip ? "TB" : "BT") + ";\n";
  out += "  node [shape=box];\n";
  for (std::size_t i = 0; i < f.elements.size(); ++i) {
    const Chain& x = f.elements[i];
    out += "  n" + std::to_string(i) + " [label=" +
           detail::dot_two_line(format_chain(x), epi_label(f.spec, x)) + "];\n";
  }
  for (const auto& [u, v] : f.cover_edges())
    out += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

// Specialization diagram (transitive reduction): edge u -> v means u ~> v.
inline std::string dot_spectrum(const Frame& f, const SpectralSpace& sp, bool flip = false) {
  std::string out = "digraph spectrum {\n";
  out += std::string("  rankdir=") + (flip ? "TB" : "BT") + ";\n";
  out += "  node [shape=box];\n";
  for (int p : sp.points) {
    const Chain& x = f.elements[static_cast<std::size_t>(p)];
    out += "  n" + std::to_string(p) + " [label=" +
           detail::dot_two_line(format_chain(x), epi_label(f.spec, x)) + "];\n";
  }
  for (const auto& [u, v] : sp.reduction)
    out += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

inline std::string dot_balmer(const BalmerSpace& b, bool flip = false) {
  std::string out = "digraph balmer {\n";
  out += std::string("  rankdir=") + (flip ? "TB" : "BT") + ";\n";
  out += "  node [shape=box];\n";
  for (int i = 0; i < b.point_count; ++i)
    out += "  n" + std::to_string(i) + " [label=" + detail::dot_quote("p" + std::to_string(i)) +
           "];\n";
  for (const auto& [u, v] : b.reduction)
    out += "  n" + std::to_string(u) + " -> n" + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

// --- text ------------------------------------------------------------------

inline std::string text_telescope(const TelescopeVerdict& tv) {
  if (tv.holds) return "telescope: holds";
  return "telescope: fails (j=" + std::to_string(tv.witness) + ")";
}

inline std::string text_frame_summary(const Frame& f, const SpectralSpace& sp,
                                      const TelescopeVerdict& tv) {
  return "elements: " + std::to_string(f.elements.size()) +
         ", points: " + std::to_string(sp.points.size()) + ", " + text_telescope(tv);
}

inline std::string text_hasse(const Frame& f) {
  std::string out;
  for (const auto& [u, v] : f.cover_edges())
    out += format_chain(f.elements[static_cast<std::size_t>(u)]) + " -> " +
           format_chain(f.elements[static_cast<std::size_t>(v)]) + "\n";
  return out;
}

inline std::string text_spectrum(const Frame& f, const SpectralSpace& sp) {
  std::string out = "points: " + std::to_string(sp.points.size()) + "\n";
  for (const auto& [u, v] : sp.reduction)
    out += format_chain(f.elements[static_cast<std::size_t>(u)]) + " ~> " +
           format_chain(f.elements[static_cast<std::size_t>(v)]) + "\n";
  return out;
}

inline std::string text_balmer(const BalmerSpace& b) {
  std::string out = "points: " + std::to_string(b.point_count) +
                    ", thick ideals: " + std::to_string(b.thick_count) + "\n";
  for (const auto& [u, v] : b.reduction)
    out += "p" + std::to_string(u) + " ~> p" + std::to_string(v) + "\n";
  return out;
}

inline std::string text_comparison(const Frame& f, const ComparisonMap& cm) {
  std::string out;
  for (const auto& [p, b] : cm.assignment)
    out += format_chain(f.elements[static_cast<std::size_t>(p)]) + " -> p" +
           std::to_string(b) + "\n";
  out += std::string("bijective: ") + (cm.bijective ? "yes" : "no") + "\n";
  return out;
}

}  // namespace smashframe

#endif
