#ifndef PICARDCALC_REPORT_JSON_HPP
#define PICARDCALC_REPORT_JSON_HPP

#include "picardcalc/moduli_report.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace picard {

// Integers become JSON numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are always {"num": "...", "den": "..."}.
nlohmann::json integer_json(const Integer& z);
nlohmann::json rational_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Params& p);
nlohmann::json to_json(const Invariants& inv);
nlohmann::json to_json(const RationalMatrix& m);
nlohmann::json to_json(const DivisorClass& c);
nlohmann::json to_json(const AbelianGroupStructure& group);
nlohmann::json to_json(const BadLocusData& data);
nlohmann::json to_json(const chow::Verdict& v);
nlohmann::json to_json(const PicardReport& report);

std::string render_text(const PicardReport& report);
std::string render_text(const chow::Verdict& v, int indent = 0);

} // namespace picard

#endif
