#ifndef KSTAB_IO_HPP
#define KSTAB_IO_HPP

#include <string>

#include "kstab/datum.hpp"
#include "kstab/functionals.hpp"
#include "kstab/oracle.hpp"
#include "kstab/stability.hpp"

namespace kstab {

// JSON numbers are {"exact": "p/q", "decimal": x}; CSV carries decimals only.

std::string to_json(const FunctionalReport& r);
std::string to_json(const NumericReport& r);
std::string to_json(const ValidationReport& r);
std::string to_json(const Verdict& v);

std::string csv_header(const FunctionalReport& r);
std::string csv_row(const FunctionalReport& r);
std::string csv_header(const NumericReport& r);
std::string csv_row(const NumericReport& r);

std::string to_text(const FunctionalReport& r);
std::string to_text(const ValidationReport& r);
/// "Fails; destabilizer v=(1,1), D=-1/6" and similar one-line summaries.
std::string to_text(const Verdict& v);

}  // namespace kstab

#endif
