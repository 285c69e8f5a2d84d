#ifndef OPENBOOK_IO_HPP
#define OPENBOOK_IO_HPP

#include <string>

#include "json.hpp"
#include "openbook/classify.hpp"
#include "openbook/mcg.hpp"

namespace openbook {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kOpenBookSchema = "openbook/1";
inline constexpr const char* kReportSchema = "report/1";

using json = nlohmann::ordered_json;

// Thrown on malformed documents; the message carries the document path.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// curve specs: "boundary:2", "partition:2,3", "word:2+,3-"
CurveWord parse_curve_spec(const PlanarSurface& S, const std::string& spec);
ArcWord parse_arc_spec(const PlanarSurface& S, const std::string& spec);

json emit_curve(const PlanarSurface& S, const CurveWord& c);
CurveWord parse_curve(const PlanarSurface& S, const json& j,
                      const std::string& where);
json emit_arc(const ArcWord& a);
ArcWord parse_arc(const PlanarSurface& S, const json& j,
                  const std::string& where);

json emit_openbook(const OpenBook& ob);
OpenBook parse_openbook(const json& doc);
OpenBook parse_openbook_text(const std::string& text);

json emit_report(const OpenBook& ob, const Certificate& cert,
                 std::int64_t timing_ms);

}  // namespace openbook

#endif
