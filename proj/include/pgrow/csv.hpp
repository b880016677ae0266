#ifndef PGROW_CSV_HPP
#define PGROW_CSV_HPP

#include <iosfwd>
#include <string>

#include "pgrow/grid.hpp"
#include "pgrow/limits.hpp"
#include "pgrow/subharmonic.hpp"

namespace pgrow {

/// Reads a growth sample. Header `x,y` holds log-coordinate data; header
/// `r,value` holds raw data converted via x = ln r, y = ln value (value <= 0
/// is an error). A multi-column file (e.g. `r,c,b,m,...`) needs an explicit
/// column name. Rows must be sorted strictly increasing in the first column.
LogLogSample read_sample_csv(std::istream& in, const std::string& column = "");
LogLogSample read_sample_file(const std::string& path, const std::string& column = "");

/// Reads a raw value track: header `x,y`, y taken as-is (no log transform).
Track read_track_csv(std::istream& in);
Track read_track_file(const std::string& path);

void write_sample_csv(std::ostream& out, const LogLogSample& s);
void write_track_csv(std::ostream& out, const Track& t);

/// `r,c,b,m,normalization` rows.
void write_means_csv(std::ostream& out, const MeansSeries& series);

/// `x,lnA,lnV,rho_m` rows.
void write_construction_csv(std::ostream& out, const std::vector<double>& xs,
                            const std::vector<double>& ln_a,
                            const std::vector<double>& ln_v,
                            const std::vector<double>& rho_m);

/// Shortest round-trip decimal form used by every CSV writer.
std::string format_double(double v);

} // namespace pgrow

#endif
