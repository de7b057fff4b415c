#include "betaword/json_io.hpp"

namespace betaword {

namespace {

Json words_to_json(const std::set<Word>& words) {
  Json arr = Json::array();
  for (const Word& w : words) arr.push_back(to_display(w));
  return arr;
}

Json letters_to_json(const std::set<Letter>& letters) {
  Json arr = Json::array();
  for (Letter a : letters) arr.push_back(static_cast<int>(a));
  return arr;
}

Json terms_to_json(const std::vector<std::pair<int, BigRat>>& terms) {
  Json arr = Json::array();
  for (const auto& [n, q] : terms)
    arr.push_back(Json::array({n, rat_num(q).str(), rat_den(q).str()}));
  return arr;
}

}  // namespace

std::string frac_str(const BigRat& q) { return rat_num(q).str() + "/" + rat_den(q).str(); }

Json extension_to_json(const ExtensionRecord& rec) {
  return Json{{"factor", to_display(rec.factor)},
              {"left_extensions", letters_to_json(rec.left_extensions)},
              {"right_extensions", letters_to_json(rec.right_extensions)},
              {"observation_prefix_length", rec.observation_prefix_length},
              {"touches_prefix_start", rec.touches_prefix_start},
              {"touches_prefix_end", rec.touches_prefix_end}};
}

Json index_to_json(const IndexRecord& rec) {
  return Json{{"factor", to_display(rec.factor)},
              {"maximal_power_length", rec.maximal_power.size()},
              {"index", frac_str(rec.index)},
              {"index_mixed", mixed_fraction(rec.index)},
              {"attained_at", rec.attained_at},
              {"observation_prefix_length", rec.observation_prefix_length},
              {"truncated_by_prefix", rec.truncated_by_prefix}};
}

Json returns_to_json(const ReturnWordSet& rws) {
  return Json{{"target", to_display(rws.target)},
              {"complete_returns", words_to_json(rws.complete_returns)},
              {"left_returns", words_to_json(rws.left_returns)},
              {"right_returns", words_to_json(rws.right_returns)},
              {"observation_prefix_length", rws.observation_prefix_length}};
}

Json return_types_to_json(const ReturnTypeReport& report) {
  return Json{{"n", report.n},
              {"z", to_display(report.z)},
              {"types",
               Json{{"A", words_to_json(report.type_a)},
                    {"B", words_to_json(report.type_b)},
                    {"C", words_to_json(report.type_c)}}},
              {"undetermined", words_to_json(report.undetermined)},
              {"observation_prefix_length", report.observation_prefix_length}};
}

Json bispecial_to_json(const BispecialFactor& v) {
  Json j{{"length", v.length.str()},
         {"left_pair", Json::array({static_cast<int>(v.a), static_cast<int>(v.b)})},
         {"right_pair", Json::array({static_cast<int>(v.c), static_cast<int>(v.d)})},
         {"iterations", v.iterations},
         {"seed_zeros", v.seed_zeros}};
  if (v.word) j["word"] = to_display(*v.word);
  return j;
}

Json critexp_to_json(const CritExpReport& report) {
  Json e_value;
  if (report.e_exact) {
    e_value = Json{{"exact", frac_str(*report.e_exact)},
                   {"mixed", mixed_fraction(*report.e_exact)}};
  } else {
    e_value = Json{{"lower", frac_str(report.e_enclosure.lo)},
                   {"upper", frac_str(report.e_enclosure.hi)}};
  }
  Json j{{"expansion", report.expansion.to_string()},
         {"m", report.expansion.m()},
         {"p", report.expansion.p()},
         {"t", report.t},
         {"z", static_cast<int>(report.z)},
         {"branch", to_string(report.branch)},
         {"e_terms", terms_to_json(report.e_I_terms)},
         {"e_value", e_value},
         {"e_star",
          Json{{"value", rat_to_decimal(report.e_star.mid(), 15)},
               {"error_bound", rat_to_decimal(report.e_star.width(), 15)},
               {"unconditional", report.e_star_unconditional}}},
         {"e_I",
          Json{{"finite_max", frac_str(report.e_I_finite_max)},
               {"argmax", report.e_I_argmax},
               {"attained", report.e_I_attained},
               {"near_tie", report.near_tie},
               {"tail_certificate", report.tail_certificate}}},
         {"e_II",
          Json{{"bound", report.type2_bound},
               {"witness_terms", terms_to_json(report.e_II_witness_terms)}}},
         {"brute_force_floor",
          Json{{"value", frac_str(report.brute_force_floor)},
               {"prefix_length", report.floor_prefix_length},
               {"max_factor_length", report.floor_max_factor_length}}}};
  if (report.e_II_exact) j["e_II"]["exact"] = frac_str(*report.e_II_exact);
  return j;
}

Json verification_to_json(const VerificationReport& report) {
  return Json{{"passed", report.passed},
              {"failures", report.failures},
              {"notes", report.notes},
              {"floor", frac_str(report.floor)},
              {"high_index_lengths_checked", report.high_index_lengths_checked},
              {"terms_attained", report.terms_attained},
              {"terms_skipped", report.terms_skipped}};
}

}  // namespace betaword
