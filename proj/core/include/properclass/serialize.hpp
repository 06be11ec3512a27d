#ifndef PROPERCLASS_SERIALIZE_HPP
#define PROPERCLASS_SERIALIZE_HPP

#include <string>

#include "properclass/category.hpp"
#include "properclass/comma.hpp"
#include "properclass/euclidean.hpp"
#include "properclass/homology.hpp"
#include "properclass/simplicial.hpp"
#include "properclass/verify_suite.hpp"

namespace properclass {

/// JSON encodings used by the command line (schema version 1). All
/// homology data is emitted as exact integers.
std::string homology_to_json(const HomologyResult& h);
std::string category_to_json(const FiniteCategory& c);
std::string complex_to_json(const SimplicialComplex& x);
SimplicialComplex complex_from_json(const std::string& text);
std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& reports);
std::string nullification_report_to_json(const NullificationReport& r);
std::string overcategory_report_to_json(const OvercategoryReport& r);

}  // namespace properclass

#endif
