#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "paretax/economy.hpp"
#include "paretax/policy.hpp"

namespace paretax {

// One histogram bin, [lo, hi) in EUR.
struct BinRow {
    double lo = 0;
    double hi = 0;
    double count = 0;
};

// Sorted, non-overlapping income histogram.
class BinTable {
public:
    BinTable() = default;
    // Validates: lo < hi per row, rows sorted by lo, no overlaps, counts >= 0.
    explicit BinTable(std::vector<BinRow> rows);

    const std::vector<BinRow>& rows() const { return rows_; }
    bool contiguous() const { return contiguous_; }
    bool empty() const { return rows_.empty(); }
    std::size_t size() const { return rows_.size(); }
    double total_count() const;

private:
    std::vector<BinRow> rows_;
    bool contiguous_ = true;
};

// Fixed-width histogram of values over [lo, lo + n_bins*width); values
// outside the range are dropped.
BinTable make_histogram(std::span<const double> values, double lo,
                        double width, std::size_t n_bins);

// CSV with header `income_keur_lo,income_keur_hi,count`. `#` comments and
// blank lines are skipped; malformed input raises parse_error with the line.
BinTable parse_bins_csv(std::istream& in);
// Inverse of parse_bins_csv; numbers are emitted in shortest round-trip form,
// so emit-then-parse reproduces the table exactly.
void emit_bins_csv(const BinTable& table, std::ostream& out);

// Same layout with header `wealth_keur_lo,wealth_keur_hi,count`, used for
// simulator output.
void emit_wealth_histogram_csv(const BinTable& table, std::ostream& out);

// CSV with header `income_keur,tax_rate,post_tax_keur`; rates carry six
// decimals, money columns six significant digits. Byte-stable across runs.
void emit_schedule_csv(std::span<const ScheduleRow> rows, std::ostream& out);

// A `key = value` run description. Money keys carry their unit in the name
// (m_lab_geur, x_pov_keur, ...); unknown keys are fatal.
struct Scenario {
    std::optional<double> n_tot;
    double n_lab = 0;
    double n_cap = 0;
    double m_lab = 0;                    // EUR
    std::optional<double> m_cap;         // EUR
    std::optional<double> capital_share;
    double x_pov = 0;                    // EUR
    double x_c = 0;                      // EUR
    std::optional<double> delta_m;       // EUR
    std::optional<double> tau;
    std::optional<std::uint64_t> seed;

    // Snapshot with declared m_cap only; share/fit estimation is the
    // economy module's job.
    EconomySnapshot snapshot() const;
};

Scenario parse_scenario(std::istream& in);

}  // namespace paretax
