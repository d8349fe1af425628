#pragma once

// JSON and CSV renderings of results. Keys keep insertion order so output is
// stable byte for byte.

#include <string>

#include <json.hpp>

#include "oddkh/complex.hpp"
#include "oddkh/cone.hpp"
#include "oddkh/cube.hpp"
#include "oddkh/pd.hpp"
#include "oddkh/spectral.hpp"

namespace oddkh {

using Json = nlohmann::ordered_json;

Json diagram_json(const Diagram& d);
Json normalization_json(const BigradedComplex& c);
Json laurent_json(const LaurentPoly& p);

/// {diagram, normalization, coefficients, table: [{h, q, rank, torsion[]}], euler}
Json homology_json(const Diagram& d, const BigradedComplex& c, const HomologySummary& h);
std::string homology_csv(const Diagram& d, const HomologySummary& h, bool header);

/// {r, entries: [{p, degree, q, rank}], dr_nonzero}
Json page_json(const SSPage& page);
Json pages_json(const Diagram& d, Field field, const SpectralResult& r);
std::string pages_csv(const Diagram& d, const SpectralResult& r, bool header);

Json validate_json(const Diagram& d);
std::string validate_csv(const Diagram& d, bool header);

Json euler_json(const Diagram& d, const LaurentPoly& chi, const LaurentPoly& jones_mirror,
                std::int64_t det);
std::string euler_csv(const Diagram& d, const LaurentPoly& chi, bool header);

Json skein_json(const Diagram& d, const SkeinReport& r);
std::string skein_csv(const Diagram& d, const SkeinReport& r, bool header);

/// Resolutions, edges and face classes of the cube.
Json cube_json(const Diagram& d);

Json error_json(const std::string& kind, const std::string& message);

}  // namespace oddkh
