#ifndef PERISPEC_TABLE_IO_HPP
#define PERISPEC_TABLE_IO_HPP

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

#include "perispec/eigenvalues.hpp"
#include "perispec/oracle.hpp"

namespace perispec {

enum class OutputFormat { Csv, Json };

/// nu_norm,lambda1,lambda2,lambda11,lambda12 and, for figure tables,
/// asym1,asym2,abs_err1,abs_err2,branch.
std::vector<std::string> table_columns(bool figure_columns);

/// Shortest-safe decimal form with 17 significant digits, '.' as the
/// decimal point regardless of the global locale.
std::string format_number(double v);

/// CSV: one header row then one row per sample; absent values are empty
/// fields. JSON: an array of row objects with the same keys; absent values
/// are null. Both encode bit-identical doubles.
void write_spectrum(std::ostream& os, const std::vector<SpectrumSample>& samples,
                    const MaterialParams& params, OutputFormat format, bool figure_columns);

nlohmann::json spectrum_to_json(const std::vector<SpectrumSample>& samples,
                                const MaterialParams& params, bool figure_columns);

nlohmann::json selftest_to_json(const SelftestReport& report);

const char* to_string(EntryStatus status);

}  // namespace perispec

#endif  // PERISPEC_TABLE_IO_HPP
