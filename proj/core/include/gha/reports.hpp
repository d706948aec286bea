#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace gha {

enum class Provenance { GHA, HIPT, EXTERNAL_REF };

std::string_view to_string(Provenance provenance);

/// One printed entry of a published comparison table.
struct ReferenceCell {
  double coupling = 0.0;  ///< lambda (Tables 1, 2, 4) or beta (Table 3)
  std::uint32_t n = 0;
  Provenance provenance = Provenance::GHA;
  std::string_view printed;  ///< value exactly as printed, fixing its precision
  bool disputed = false;
  std::string_view note;

  double value() const;
  int significant_digits() const;
};

/// Printed percent-error entry (Table 3 only); recomputed, never compared.
struct PrintedPercentError {
  double coupling = 0.0;
  std::uint32_t n = 0;
  std::string_view printed;
};

struct ReferenceTable {
  int id = 0;
  std::string_view coupling_name;
  std::string_view caption;
  std::vector<ReferenceCell> cells;
  std::vector<PrintedPercentError> percent_errors;
};

/// Tables 1-4. Throws DomainError for any other id.
const ReferenceTable& reference_table(int id);

struct Tolerances {
  double gha = 5e-4;       ///< Tables 1, 3, 4 zeroth order
  double hipt = 2e-3;      ///< Table 1 second order
  double table2 = 2e-3;    ///< Table 2, both orders
  double external = 2e-3;  ///< printed external references against the oracle

  /// Every class of cell uses `tol`.
  static Tolerances uniform(double tol) { return {tol, tol, tol, tol}; }
};

struct ComparisonRow {
  double coupling = 0.0;
  std::uint32_t n = 0;
  Provenance provenance = Provenance::GHA;
  double computed = 0.0;
  double reference = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool disputed = false;
  std::string_view note;
};

struct PercentErrorRow {
  double coupling = 0.0;
  std::uint32_t n = 0;
  double printed = 0.0;
  double recomputed = 0.0;  ///< 100 |E_GHA - E_exact| / E_exact
};

struct ComparisonSummary {
  std::size_t rows = 0;
  std::size_t failures = 0;  ///< non-disputed rows outside tolerance
  std::size_t disputed = 0;
  double max_rel_error = 0.0;  ///< over non-disputed rows
};

struct ComparisonReport {
  int table = 0;
  std::vector<ComparisonRow> rows;
  std::vector<PercentErrorRow> percent_errors;
  ComparisonSummary summary;

  bool ok() const { return summary.failures == 0; }
};

struct TableOptions {
  Tolerances tolerances;
  /// Relative convergence target handed to the diagonalization oracle.
  double oracle_tol = 1e-9;
};

/// Recomputes every cell of a table with the reporting conventions:
///   Table 1: E_n for g = 1.
///   Table 2: E_n + g^2/(16 lambda) for g = -1.
///   Table 3: 2 E_n for g = 1 at lambda = beta / 2 (sextic).
///   Table 4: 2 E_n for g = 1 at lambda (octic).
/// External references are compared with exact diagonalization.
ComparisonReport run_table(int table_id, const TableOptions& options = {});

}  // namespace gha
