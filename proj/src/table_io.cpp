#include "perispec/table_io.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "perispec/asymptotics.hpp"

namespace perispec {
namespace {

std::optional<double> abs_gap(double exact, const std::optional<double>& approx) {
  if (!approx) return std::nullopt;
  return std::abs(exact - *approx);
}

std::string branch_label(const MaterialParams& params, const SpectrumSample& s) {
  if (!s.asym1) return "none";
  return classify_branch(params).kind == AsymptoticBranch::Logarithmic ? "log" : "power";
}

struct Row {
  std::vector<std::optional<double>> numbers;
  std::string branch;
};

Row make_row(const SpectrumSample& s, const MaterialParams& params, bool figure_columns) {
  Row row;
  row.numbers = {s.nu_norm, s.lambda1, s.lambda2, s.lambda11, s.lambda12};
  if (figure_columns) {
    row.numbers.push_back(s.asym1);
    row.numbers.push_back(s.asym2);
    row.numbers.push_back(abs_gap(s.lambda1, s.asym1));
    row.numbers.push_back(abs_gap(s.lambda2, s.asym2));
    row.branch = branch_label(params, s);
  }
  return row;
}

}  // namespace

std::vector<std::string> table_columns(bool figure_columns) {
  std::vector<std::string> cols = {"nu_norm", "lambda1", "lambda2", "lambda11", "lambda12"};
  if (figure_columns) {
    for (const char* c : {"asym1", "asym2", "abs_err1", "abs_err2", "branch"}) cols.emplace_back(c);
  }
  return cols;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw std::runtime_error("format_number: conversion failed");
  return std::string(buf, res.ptr);
}

nlohmann::json spectrum_to_json(const std::vector<SpectrumSample>& samples,
                                const MaterialParams& params, bool figure_columns) {
  const auto cols = table_columns(figure_columns);
  nlohmann::json rows = nlohmann::json::array();
  for (const SpectrumSample& s : samples) {
    const Row row = make_row(s, params, figure_columns);
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t i = 0; i < row.numbers.size(); ++i) {
      obj[cols[i]] = row.numbers[i] ? nlohmann::json(*row.numbers[i]) : nlohmann::json(nullptr);
    }
    if (figure_columns) obj["branch"] = row.branch;
    rows.push_back(std::move(obj));
  }
  return rows;
}

void write_spectrum(std::ostream& os, const std::vector<SpectrumSample>& samples,
                    const MaterialParams& params, OutputFormat format, bool figure_columns) {
  if (format == OutputFormat::Json) {
    os << spectrum_to_json(samples, params, figure_columns).dump(1) << '\n';
    return;
  }
  const auto cols = table_columns(figure_columns);
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '\n';
  for (const SpectrumSample& s : samples) {
    const Row row = make_row(s, params, figure_columns);
    for (std::size_t i = 0; i < row.numbers.size(); ++i) {
      if (i) os << ',';
      if (row.numbers[i]) os << format_number(*row.numbers[i]);
    }
    if (figure_columns) os << ',' << row.branch;
    os << '\n';
  }
}

const char* to_string(EntryStatus status) {
  switch (status) {
    case EntryStatus::Ok: return "ok";
    case EntryStatus::Failed: return "failed";
    case EntryStatus::Unsupported: return "unsupported";
    case EntryStatus::Error: return "error";
  }
  return "error";
}

nlohmann::json selftest_to_json(const SelftestReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const SelftestEntry& e : report.entries) {
    entries.push_back({{"n", e.point.n},
                       {"beta", e.point.beta},
                       {"delta", e.point.delta},
                       {"nu_norm", e.point.nu_norm},
                       {"status", to_string(e.status)},
                       {"series_lambda1", e.series_lambda1},
                       {"series_lambda2", e.series_lambda2},
                       {"oracle_lambda1", e.oracle_lambda1},
                       {"oracle_lambda2", e.oracle_lambda2},
                       {"discrepancy", e.discrepancy},
                       {"message", e.message}});
  }
  return {{"pass", report.pass},
          {"max_discrepancy", report.max_discrepancy},
          {"threshold", report.threshold},
          {"entries", entries}};
}

}  // namespace perispec
