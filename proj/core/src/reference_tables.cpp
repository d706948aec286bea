#include <array>
#include <charconv>
#include <string>

#include "gha/errors.hpp"
#include "gha/reports.hpp"

namespace gha {

std::string_view to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::GHA:
      return "GHA";
    case Provenance::HIPT:
      return "HIPT";
    case Provenance::EXTERNAL_REF:
      return "EXTERNAL_REF";
  }
  return "unknown";
}

double ReferenceCell::value() const {
  double out = 0.0;
  std::from_chars(printed.data(), printed.data() + printed.size(), out);
  return out;
}

int ReferenceCell::significant_digits() const {
  int digits = 0;
  bool leading = true;
  for (const char ch : printed) {
    if (ch < '0' || ch > '9') continue;
    if (leading && ch == '0') continue;
    leading = false;
    ++digits;
  }
  return digits;
}

namespace {

using Row = std::vector<std::string_view>;

// Appends one printed row (one value per column); empty entries are cells the
// source table leaves blank.
void add_row(ReferenceTable& table, double coupling, const std::vector<std::uint32_t>& levels,
             Provenance provenance, const Row& printed) {
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (printed[i].empty()) continue;
    table.cells.push_back({coupling, levels[i], provenance, printed[i], false, {}});
  }
}

// Row over couplings at fixed level (Tables 3 and 4 are printed transposed).
void add_column(ReferenceTable& table, const std::vector<double>& couplings, std::uint32_t level,
                Provenance provenance, const Row& printed) {
  for (std::size_t i = 0; i < couplings.size(); ++i) {
    table.cells.push_back({couplings[i], level, provenance, printed[i], false, {}});
  }
}

void dispute(ReferenceTable& table, double coupling, std::uint32_t n, Provenance provenance,
             std::string_view note) {
  for (auto& cell : table.cells) {
    if (cell.coupling == coupling && cell.n == n && cell.provenance == provenance) {
      cell.disputed = true;
      cell.note = note;
      return;
    }
  }
  throw DomainError("dispute: no such reference cell");
}

ReferenceTable make_table1() {
  ReferenceTable t;
  t.id = 1;
  t.coupling_name = "lambda";
  t.caption = "quartic anharmonic oscillator (g = 1): zeroth order, external reference, second order";
  const std::vector<std::uint32_t> levels{0, 1, 2, 4, 10, 40};
  using P = Provenance;
  add_row(t, 0.1, levels, P::GHA, {"0.56031", "1.7734", "3.1382", "6.2052", "17.2267", "94.84"});
  add_row(t, 0.1, levels, P::EXTERNAL_REF, {"0.55915", "1.7695", "3.1386", "6.2203", "17.352", "90.56"});
  add_row(t, 0.1, levels, P::HIPT, {"0.55911", "1.7694", "3.1391", "6.2239", "17.374", "95.766"});
  add_row(t, 1.0, levels, P::GHA, {"0.81250", "2.7599", "5.1724", "10.902", "32.663", "192.79"});
  add_row(t, 1.0, levels, P::EXTERNAL_REF, {"0.80377", "2.7379", "5.1792", "10.902", "32.963", "194.60"});
  add_row(t, 1.0, levels, P::HIPT, {"0.80321", "2.7367", "5.1824", "10.982", "33.013", "195.15"});
  add_row(t, 10.0, levels, P::GHA, {"1.5313", "5.3821", "10.3240", "22.248", "68.177", "409.89"});
  add_row(t, 10.0, levels, P::EXTERNAL_REF, {"1.5050", "5.3216", "10.3471", "22.409", "68.804", "413.94"});
  add_row(t, 10.0, levels, P::HIPT, {"1.5030", "5.3177", "10.356", "22.457", "68.996", "415.18"});
  add_row(t, 100.0, levels, P::GHA, {"3.1924", "11.325", "21.853", "47.349", "145.843", "880.55"});
  add_row(t, 100.0, levels, P::EXTERNAL_REF, {"3.1314", "11.187", "21.907", "47.707", "147.231", "889.32"});
  add_row(t, 100.0, levels, P::HIPT, {"3.1266", "11.178", "21.927", "47.817", "147.652", "892.03"});
  add_row(t, 1000.0, levels, P::GHA, {"6.8280", "24.272", "46.902", "101.742", "313.720", "1895.90"});
  add_row(t, 1000.0, levels, P::EXTERNAL_REF, {"6.6942", "23.972", "47.017", "102.516", "", ""});
  add_row(t, 1000.0, levels, P::HIPT, {"6.6836", "23.952", "47.062", "102.75", "317.65", "1920.70"});

  dispute(t, 0.1, 40, P::EXTERNAL_REF,
          "inconsistent with smooth n-dependence and with the zeroth-order value 94.84");
  dispute(t, 0.1, 10, P::GHA,
          "misprint: the gap equation gives 17.2659, which the printed second-order 17.374 builds on");
  dispute(t, 1.0, 4, P::EXTERNAL_REF,
          "misprint: duplicates the zeroth-order entry 10.902; exact value is 10.9636");
  return t;
}

ReferenceTable make_table2() {
  ReferenceTable t;
  t.id = 2;
  t.coupling_name = "lambda";
  t.caption = "quartic double well (g = -1), reported as E + g^2/(16 lambda)";
  using P = Provenance;
  struct Line {
    double lambda;
    std::uint32_t n;
    std::string_view e0, e2, ref;
  };
  const std::array<Line, 20> lines{{
      {0.1, 0, "0.5496", "0.4606", "0.4702"},   {0.1, 1, "0.8430", "0.7553", "0.7703"},
      {0.1, 2, "1.5636", "1.6547", "1.6300"},   {0.1, 4, "3.5805", "3.7232", "3.6802"},
      {0.1, 10, "12.192", "12.517", "12.400"},  {1.0, 0, "0.5989", "0.5752", "0.5800"},
      {1.0, 1, "2.1250", "2.0800", "2.1800"},   {1.0, 2, "4.2324", "4.2600", "4.2500"},
      {1.0, 4, "9.4680", "9.5950", "9.5600"},   {1.0, 10, "30.530", "30.650", "30.420"},
      {10.0, 0, "1.4098", "1.3752", "1.3800"},  {10.0, 1, "5.0650", "4.9910", "5.0900"},
      {10.0, 2, "9.8660", "9.9050", "9.8900"},  {10.0, 4, "21.561", "21.791", "21.700"},
      {10.0, 10, "66.950", "67.820", "67.620"}, {100.0, 0, "3.1340", "3.0650", "3.0700"},
      {100.0, 1, "11.175", "11.024", "11.002"}, {100.0, 2, "21.638", "21.715", "21.700"},
      {100.0, 4, "47.023", "47.505", "47.200"}, {100.0, 10, "145.27", "147.10", "146.70"},
  }};
  for (const auto& line : lines) {
    t.cells.push_back({line.lambda, line.n, P::GHA, line.e0, false, {}});
    t.cells.push_back({line.lambda, line.n, P::HIPT, line.e2, false, {}});
    t.cells.push_back({line.lambda, line.n, P::EXTERNAL_REF, line.ref, false, {}});
  }
  dispute(t, 1.0, 10, P::GHA,
          "misprint: closed form gives 30.0888; the printed value matches the second-order result");
  dispute(t, 1.0, 10, P::HIPT, "row inconsistent with the zeroth-order closed form (30.0888)");
  return t;
}

ReferenceTable make_table3() {
  ReferenceTable t;
  t.id = 3;
  t.coupling_name = "beta";
  t.caption = "sextic anharmonic oscillator, reported as 2 E_n(g = 1, lambda = beta / 2)";
  const std::vector<double> betas{0.2, 2.0, 10.0, 100.0, 400.0, 2000.0};
  using P = Provenance;
  struct Level {
    std::uint32_t n;
    Row gha, ext, percent;
  };
  const std::vector<Level> rows{
      {0,
       {"1.193", "1.676", "2.323", "3.947", "5.521", "8.206"},
       {"1.174", "1.610", "2.206", "3.717", "5.188", "7.702"},
       {"1.611", "4.079", "5.313", "6.188", "6.415", "6.544"}},
      {1,
       {"3.966", "5.931", "8.420", "14.52", "20.39", "30.37"},
       {"3.901", "5.749", "8.115", "13.95", "19.56", "29.12"},
       {"1.681", "3.165", "3.762", "4.148", "4.244", "4.298"}},
      {2,
       {"7.420", "11.61", "16.74", "29.16", "41.03", "61.18"},
       {"7.382", "11.54", "16.64", "28.98", "40.78", "60.81"},
       {"0.523", "0.612", "0.6179", "0.6157", "0.6145", "0.6138"}},
      {4,
       {"16.15", "26.48", "38.73", "68.01", "95.90", "143.2"},
       {"16.30", "26.83", "39.29", "69.05", "97.38", "145.4"},
       {"0.9170", "1.302", "1.426", "1.499", "1.517", "1.527"}},
      {6,
       {"26.88", "45.08", "66.36", "117.0", "165.1", "246.5"},
       {"27.29", "45.94", "67.70", "119.4", "168.5", "251.7"},
       {"1.50", "1.870", "1.98", "2.043", "2.058", "2.067"}},
      {10,
       {"53.24", "91.17", "135.0", "238.7", "337.1", "503.8"},
       {"54.31", "93.26", "138.2", "244.5", "345.3", "516.1"},
       {"1.967", "2.245", "2.323", "2.367", "2.377", "2.383"}},
      {14,
       {"85.01", "147.0", "218.3", "386.6", "546.2", "816.3"},
       {"86.78", "150.4", "223.4", "395.7", "559.1", "835.6"},
       {"2.047", "2.230", "2.279", "2.306", "2.313", "2.316"}},
      {17,
       {"111.9", "194.4", "289.0", "512.1", "723.7", "1082.0"},
       {"114.0", "198.3", "294.9", "522.7", "738.6", "1104.0"},
       {"1.868", "1.974", "2.001", "2.016", "2.020", "2.022"}},
  };
  for (const auto& row : rows) {
    add_column(t, betas, row.n, P::GHA, row.gha);
    add_column(t, betas, row.n, P::EXTERNAL_REF, row.ext);
    for (std::size_t i = 0; i < betas.size(); ++i) {
      t.percent_errors.push_back({betas[i], row.n, row.percent[i]});
    }
  }
  return t;
}

ReferenceTable make_table4() {
  ReferenceTable t;
  t.id = 4;
  t.coupling_name = "lambda";
  t.caption = "octic anharmonic oscillator, reported as 2 E_n(g = 1, lambda)";
  const std::vector<double> lambdas{0.1, 1.0, 5.0, 50.0, 200.0};
  using P = Provenance;
  struct Level {
    std::uint32_t n;
    Row gha, ext;
  };
  const std::vector<Level> rows{
      {0, {"1.3005", "1.7794", "2.3290", "3.5565", "4.6425"},
       {"1.2410", "1.6413", "2.1145", "3.1886", "4.1461"}},
      {1, {"4.4717", "6.3946", "8.5167", "13.172", "17.259"},
       {"4.2754", "5.9996", "7.9296", "12.1950", "15.9519"}},
      {2, {"8.6264", "12.717", "17.126", "26.698", "35.062"},
       {"8.4530", "12.421", "16.711", "26.033", "34.183"}},
      {4, {"19.763", "30.026", "40.863", "64.165", "84.444"},
       {"19.9930", "30.4605", "41.4947", "65.20180", "85.8251"}},
      {6, {"34.217", "52.669", "72.044", "113.48", "149.47"},
       {"35.0560", "54.1403", "74.0830", "116.7629", "153.8278"}},
      {8, {"51.570", "80.013", "109.65", "172.99", "227.97"},
       {"53.145590", "82.6496", "113.3486", "178.9215", "235.8193"}},
      {9, {"61.239", "95.255", "130.64", "206.23", "271.81"},
       {"63.2253", "98.5529", "135.2598", "213.6157", "281.5864"}},
      {10, {"71.532", "111.49", "153.01", "241.64", "318.52"},
       {"73.9545", "115.4899", "158.5991", "250.5751", "330.3433"}},
      {11, {"824.24", "128.68", "176.69", "279.14", "368.00"},
       {"85.3079", "133.4201", "183.3103", "289.7106", "381.9720"}},
      {12, {"93.893", "146.79", "201.65", "318.67", "420.14"},
       {"97.2636", "152.3080", "209.3443", "330.9440", "436.3695"}},
      {13, {"105.92", "165.79", "227.84", "360.14", "474.85"},
       {"109.7967", "172.1125", "236.6436", "374.1834", "493.4143"}},
      {14, {"118.49", "185.65", "255.21", "403.50", "532.06"},
       {"122.8909", "192.8082", "265.1732", "419.3737", "553.0335"}},
  };
  for (const auto& row : rows) {
    add_column(t, lambdas, row.n, P::GHA, row.gha);
    add_column(t, lambdas, row.n, P::EXTERNAL_REF, row.ext);
  }
  dispute(t, 0.1, 11, P::GHA, "misprint: monotone column implies ~82.42");
  dispute(t, 1.0, 6, P::GHA, "misprint: transposed digits of 52.699, the closed-form value");
  return t;
}

}  // namespace

const ReferenceTable& reference_table(int id) {
  static const std::array<ReferenceTable, 4> tables{make_table1(), make_table2(), make_table3(),
                                                    make_table4()};
  if (id < 1 || id > 4) {
    throw DomainError("reference_table: table id must be 1-4, got " + std::to_string(id));
  }
  return tables[static_cast<std::size_t>(id - 1)];
}

}  // namespace gha
