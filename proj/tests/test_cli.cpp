#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "coorbit/config.hpp"
#include "coorbit/io.hpp"
#include "coorbit/kernel.hpp"
#include "coorbit/presets.hpp"
#include "coorbit/report.hpp"
#include "test_support.hpp"

using namespace coorbit;
using namespace coorbit::testing;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "coorbit_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run_cli(const std::string& args) {
    const std::string command = std::string(COORBIT_CLI_PATH) + " " + args +
                                " > " + (scratch_dir() / "stdout.txt").string() +
                                " 2> " + (scratch_dir() / "stderr.txt").string();
    const int status = std::system(command.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& path) {
    std::ifstream input(path, std::ios::binary);
    std::ostringstream out;
    out << input.rdbuf();
    return out.str();
}

void write_identity_operator(const fs::path& path, int n) {
    write_matrix_file(path.string(), OperatorMatrix::identity(static_cast<std::size_t>(n)));
}

}  // namespace

TEST_CASE("matrix files round trip bit exactly") {
    std::mt19937_64 rng(71);
    const fs::path path = scratch_dir() / "roundtrip.cm";
    const OperatorMatrix m = random_matrix(5, 3, rng);
    write_matrix_file(path.string(), m);
    const OperatorMatrix back = read_matrix_file(path.string());
    REQUIRE(back.rows() == 5);
    REQUIRE(back.cols() == 3);
    for (std::size_t i = 0; i < m.entries().size(); ++i)
        REQUIRE(back.entries()[i] == m.entries()[i]);
}

TEST_CASE("signal files round trip") {
    std::mt19937_64 rng(72);
    const fs::path path = scratch_dir() / "signal.cm";
    const Signal f = random_signal(7, rng);
    write_signal_file(path.string(), f);
    const Signal back = read_signal_file(path.string());
    REQUIRE(back.length() == 7);
    for (std::size_t i = 0; i < 7; ++i) REQUIRE(back[i] == f[i]);
}

TEST_CASE("malformed matrix files carry line and column diagnostics") {
    const fs::path path = scratch_dir() / "broken.cm";

    std::ofstream(path) << "# complex-matrix rows=2 cols=2\n1;0,2;0\n3;0\n";
    try {
        read_matrix_file(path.string());
        FAIL("expected IOError");
    } catch (const IOError& error) {
        CHECK(error.line() == 3);
        CHECK(error.column() > 0);
    }

    std::ofstream(path) << "# complex-matrix rows=1 cols=1\n1:0\n";
    try {
        read_matrix_file(path.string());
        FAIL("expected IOError");
    } catch (const IOError& error) {
        CHECK(error.line() == 2);
        CHECK(error.column() == 1);
    }

    std::ofstream(path) << "not a header\n";
    CHECK_THROWS_AS(read_matrix_file(path.string()), IOError);
    CHECK_THROWS_AS(read_matrix_file((scratch_dir() / "missing.cm").string()), IOError);
}

TEST_CASE("config files parse with overrides and validation") {
    const fs::path path = scratch_dir() / "sample.conf";
    std::ofstream(path) << "# sample\nrepresentation1=wh\nn1=16\nn2=16\np=inf\ns1=1.5\n";
    Config config = Config::from_file(path.string());
    CHECK(config.n1 == 16);
    CHECK(std::isinf(config.p_value()));
    CHECK(config.s1 == doctest::Approx(1.5));
    config.set("p", "2");
    CHECK(config.p_value() == doctest::Approx(2.0));
    CHECK_THROWS_AS(config.set("no_such_key", "1"), ConfigError);

    Config bad;
    bad.representation1 = "affine";
    bad.n1 = 12;
    bad.window1 = "haar";
    CHECK_THROWS_AS(bad.validate(), ConfigError);

    Config wrong_weight;
    wrong_weight.weight_family1 = "dyadic";   // wh representation
    CHECK_THROWS_AS(wrong_weight.validate(), ConfigError);

    Config fine;
    fine.representation1 = "affine";
    fine.n1 = 16;
    fine.window1 = "haar";
    fine.weight_family1 = "dyadic";
    CHECK_NOTHROW(fine.validate());
    CHECK(fine.resolved_levels(1) == 3);
}

TEST_CASE("report documents round trip through JSON") {
    ReportDocument document;
    document.config_echo = {{"n1", "8"}, {"p", "inf"}};
    document.note = finite_scale_note();
    BoundednessReport report;
    report.direction = "one_to_p";
    report.p = kInf;
    report.weight1 = "polynomial_tf(s=1)";
    report.weight2 = "constant";
    report.criterion_value = 1.25;
    report.oracle_norm = 1.25;
    report.equivalence_ratio = 1.0;
    report.window_constant_domain = 2.5;
    report.window_constant_codomain = 3.5;
    report.tolerance_used = 1e-12;
    report.warnings = {"weight parameter exceeds the ambient guard sigma"};
    report.extras = {{"endpoint_one_to_one", 0.5}, {"endpoint_inf_to_inf", 7.0}};
    document.reports.push_back(report);
    document.norm_table = {{"hilbert_schmidt", 2.0}, {"l2_operator_norm", 1.0}};

    const std::string emitted = emit_json(document);
    const ReportDocument parsed = parse_json(emitted);
    CHECK(parsed == document);
    CHECK(emit_json(parsed) == emitted);
}

TEST_CASE("cli certify produces a valid deterministic report") {
    const fs::path op = scratch_dir() / "id16.cm";
    write_identity_operator(op, 16);
    const fs::path conf = scratch_dir() / "certify.conf";
    std::ofstream(conf) << "n1=16\nn2=16\np=1\ns1=1\ns2=1\ndirection=one_to_p\n"
                        << "operator=" << op.string() << "\n";
    const fs::path out1 = scratch_dir() / "report.json";

    REQUIRE(run_cli("certify --config " + conf.string() + " --out " + out1.string()) == 0);
    const std::string first_run = slurp(out1);
    REQUIRE(run_cli("certify --config " + conf.string() + " --out " + out1.string()) == 0);
    CHECK(slurp(out1) == first_run);

    const ReportDocument document = parse_json(first_run);
    REQUIRE(document.reports.size() == 1);
    const BoundednessReport& report = document.reports[0];
    CHECK(std::isfinite(report.criterion_value));

    // Cross-check the emitted value against the library pipeline.
    const FrameSpec frame = wh_gaussian_frame(16);
    CertificationSpec spec;
    spec.direction = CertificationDirection::OneToP;
    spec.p = 1.0;
    spec.m1 = Weight::polynomial_tf(1.0);
    spec.m2 = Weight::polynomial_tf(1.0);
    const BoundednessReport expected =
        certify(OperatorMatrix::identity(16), frame, frame, spec);
    CHECK(report.criterion_value == doctest::Approx(expected.criterion_value).epsilon(1e-14));
    CHECK(report.oracle_norm == doctest::Approx(expected.oracle_norm).epsilon(1e-14));
}

TEST_CASE("cli rejects an affine size that is not a power of two") {
    const fs::path op = scratch_dir() / "id12.cm";
    write_identity_operator(op, 12);
    CHECK(run_cli("certify --representation1 affine --window1 haar --n1 12 --n2 12 "
                  "--operator " + op.string() + " --out " +
                  (scratch_dir() / "r.json").string()) == 2);
}

TEST_CASE("cli reports IO failure for a missing operator file") {
    CHECK(run_cli("certify --n1 8 --n2 8 --operator " +
                  (scratch_dir() / "nonexistent.cm").string() + " --out " +
                  (scratch_dir() / "r.json").string()) == 3);
}

TEST_CASE("cli selftest passes on defaults and small sizes") {
    CHECK(run_cli("selftest --n1 16") == 0);
    CHECK(run_cli("selftest --n1 4") == 0);
}

TEST_CASE("cli selftest catches an injected NaN window") {
    CHECK(run_cli("selftest --n1 8 --inject_nan true") == 1);
}

TEST_CASE("selftest stays deterministic under COORBIT_NUM_THREADS") {
    const std::string single = "COORBIT_NUM_THREADS=1 " + std::string(COORBIT_CLI_PATH) +
                               " selftest --n1 8 > " +
                               (scratch_dir() / "st1.txt").string() + " 2>/dev/null";
    const std::string quad = "COORBIT_NUM_THREADS=4 " + std::string(COORBIT_CLI_PATH) +
                             " selftest --n1 8 > " +
                             (scratch_dir() / "st4.txt").string() + " 2>/dev/null";
    REQUIRE(WEXITSTATUS(std::system(single.c_str())) == 0);
    REQUIRE(WEXITSTATUS(std::system(quad.c_str())) == 0);
    CHECK(slurp(scratch_dir() / "st1.txt") == slurp(scratch_dir() / "st4.txt"));
}

TEST_CASE("cli cross certifies between representations") {
    const fs::path op = scratch_dir() / "id16b.cm";
    write_identity_operator(op, 16);
    const fs::path out = scratch_dir() / "cross.json";
    REQUIRE(run_cli("cross --representation1 affine --window1 haar --n1 16 --n2 16 "
                    "--s1 -0.5 --s2 1 --p 2 --operator " + op.string() +
                    " --out " + out.string()) == 0);
    const ReportDocument document = parse_json(slurp(out));
    REQUIRE(document.reports.size() == 1);
    CHECK(std::isfinite(document.reports[0].criterion_value));
    CHECK(document.reports[0].criterion_value > 0.0);

    CHECK(run_cli("cross --n1 16 --n2 16 --operator " + op.string() + " --out " +
                  out.string()) == 2);   // same representation on both sides
}

TEST_CASE("cli norms emits a norm table") {
    const fs::path op = scratch_dir() / "id8.cm";
    write_identity_operator(op, 8);
    const fs::path out = scratch_dir() / "norms.json";
    REQUIRE(run_cli("norms --n1 8 --n2 8 --operator " + op.string() + " --out " +
                    out.string()) == 0);
    const ReportDocument document = parse_json(slurp(out));
    CHECK(document.reports.empty());
    REQUIRE(!document.norm_table.empty());
    bool found = false;
    for (const auto& [name, value] : document.norm_table) {
        if (name == "l2_operator_norm") {
            CHECK(value == doctest::Approx(1.0).epsilon(1e-9));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("rank-one cross operators factor into the two 1D norms") {
    std::mt19937_64 rng(73);
    const int n = 16;
    const FrameSpec haar = haar_frame(n);
    const FrameSpec wh = wh_gaussian_frame(n);
    const Signal f1 = random_signal(n, rng);   // affine side
    const Signal f2 = random_signal(n, rng);   // wh side
    CertificationSpec spec;
    spec.direction = CertificationDirection::OneToP;
    spec.p = 1.0;
    spec.m1 = Weight::dyadic(-0.5);
    spec.m2 = Weight::polynomial_tf(1.0);
    const BoundednessReport report = certify(rank_one(f2, f1), haar, wh, spec);

    const CoeffField1D v1 = analyze(f1, haar);
    const CoeffField1D v2 = analyze(f2, wh);
    double lead = 0.0;
    for (std::size_t i = 0; i < v1.size(); ++i)
        lead = std::max(lead, std::abs(v1[i]) / spec.m1(haar.lattice().point(i)));
    double tail = 0.0;
    for (std::size_t i = 0; i < v2.size(); ++i)
        tail += std::abs(v2[i]) * spec.m2(wh.lattice().point(i));
    CHECK(report.criterion_value == doctest::Approx(lead * tail).epsilon(1e-10));
}
