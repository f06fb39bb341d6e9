// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion carries its stated time budget and fails when exceeded.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "grassmann/serialize.hpp"
#include "grassmann/sign_vector.hpp"

using namespace grassmann;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<void(std::string&)> body;  // appends failure details
};

AbelianGroup Z(int rank) { return AbelianGroup{rank, {}}; }
AbelianGroup Z2() { return AbelianGroup{0, {2}}; }
AbelianGroup Z_plus_Z2() { return AbelianGroup{1, {2}}; }
AbelianGroup trivial() { return AbelianGroup{0, {}}; }

void expect(bool condition, const std::string& message, std::string& errors) {
    if (!condition) {
        if (!errors.empty()) errors += "; ";
        errors += message;
    }
}

std::string shape_name(int k, int n) {
    return "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

// ---- criterion 1 & 2: the Gr(2,5) tables -----------------------------------

void criterion_gr25_constant(std::string& errors) {
    CohomologyTable table = cohomology(GrassmannShape(2, 5), FillVariant::standard);
    std::vector<AbelianGroup> expected = {Z(1),         trivial(), Z2(), Z2(),
                                          Z_plus_Z2(),  trivial(), Z2()};
    expect(table.groups == expected, "constant-coefficient table differs", errors);
}

int run_cli(const std::string& args, std::string& output);

void criterion_gr25_twisted(std::string& errors) {
    CohomologyTable table = cohomology(GrassmannShape(2, 5), FillVariant::shifted);
    std::vector<AbelianGroup> expected = {trivial(), Z2(), Z(1), Z2(), Z2(), Z2(), Z(1)};
    expect(table.groups == expected, "twisted-coefficient table differs", errors);

    CohomologyTable hom = homology(GrassmannShape(2, 5));
    for (int j = 0; j <= 6; ++j)
        expect(hom.groups[static_cast<size_t>(j)] == expected[static_cast<size_t>(6 - j)],
               "homology is not the degree reversal at H_" + std::to_string(j), errors);

    // The homology command itself reports the reversed table.
    std::string output;
    int code = run_cli("cohomology 2 5 --homology", output);
    expect(code == 0, "homology command exited with " + std::to_string(code), errors);
    if (code == 0) {
        Json document = Json::parse(output, nullptr, false);
        expect(!document.is_discarded(), "homology command emitted unparsable JSON", errors);
        if (!document.is_discarded()) {
            const Json& groups = document["payload"]["groups"];
            expect(groups.size() == 7, "homology command group count", errors);
            for (int j = 0; j <= 6; ++j) {
                const AbelianGroup& want = expected[static_cast<size_t>(6 - j)];
                expect(groups[static_cast<size_t>(j)]["free_rank"] == want.free_rank &&
                           groups[static_cast<size_t>(j)]["torsion"] == Json(want.torsion),
                       "homology command table differs at H_" + std::to_string(j), errors);
            }
        }
    }
}

// ---- criterion 3: projective spaces -----------------------------------------

AbelianGroup projective_constant(int degree, int n) {
    int top = n - 1;
    if (degree == 0) return Z(1);
    if (degree == top && top % 2 == 1) return Z(1);
    if (degree > 0 && degree <= top && degree % 2 == 0) return Z2();
    return trivial();
}

AbelianGroup projective_twisted(int degree, int n) {
    int top = n - 1;
    if (degree == top && top % 2 == 0) return Z(1);
    if (degree >= 1 && degree <= top && degree % 2 == 1) return Z2();
    return trivial();
}

void criterion_projective(std::string& errors) {
    for (int n = 2; n <= 12; ++n) {
        GrassmannShape shape(1, n);
        CohomologyTable constant = cohomology(shape, FillVariant::standard);
        CohomologyTable twisted = cohomology(shape, FillVariant::shifted);
        for (int degree = 0; degree <= shape.dimension(); ++degree) {
            expect(constant.groups[static_cast<size_t>(degree)] ==
                       projective_constant(degree, n),
                   "constant table of " + shape_name(1, n) + " at " + std::to_string(degree),
                   errors);
            expect(twisted.groups[static_cast<size_t>(degree)] == projective_twisted(degree, n),
                   "twisted table of " + shape_name(1, n) + " at " + std::to_string(degree),
                   errors);
        }
    }
}

// ---- criterion 4: cell sums against closed forms ----------------------------

void criterion_polynomial_forms(std::string& errors) {
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k)
            expect(p_sum(GrassmannShape(k, n), FillVariant::standard) ==
                       p_closed(GrassmannShape(k, n)),
                   "p sum != closed for " + shape_name(k, n), errors);
    for (int n = 3; n <= 11; n += 2)
        for (int k = 1; k < n; ++k)
            expect(p_sum(GrassmannShape(k, n), FillVariant::shifted) ==
                       p_star_closed(GrassmannShape(k, n)),
                   "p* sum != q^s p for " + shape_name(k, n), errors);
}

// ---- criterion 5: point-count examples --------------------------------------

void criterion_point_counts(std::string& errors) {
    for (int m = 1; m <= 6; ++m) {
        IntPolynomial even_expected =
            (IntPolynomial::monomial(m) - IntPolynomial::constant(1)).shifted(m - 1);
        expect(fq_point_count(GrassmannShape(1, 2 * m)).full() == even_expected,
               "point count of " + shape_name(1, 2 * m), errors);
        expect(fq_point_count(GrassmannShape(1, 2 * m + 1)).full() ==
                   IntPolynomial::monomial(2 * m),
               "point count of " + shape_name(1, 2 * m + 1), errors);
    }
    expect(fq_point_count(GrassmannShape(2, 4)).full() ==
               IntPolynomial({0, 0, 1, 0, 1}),
           "point count of Gr(2,4)", errors);
    IntPolynomial gr36 = (IntPolynomial({1, 0, 1}) *
                          (IntPolynomial::monomial(3) - IntPolynomial::constant(1)))
                             .shifted(4);
    expect(fq_point_count(GrassmannShape(3, 6)).full() == gr36, "point count of Gr(3,6)",
           errors);
}

// ---- criterion 6: Betti numbers against the Poincare polynomial -------------

void criterion_betti(std::string& errors) {
    for (int n = 2; n <= 10; ++n) {
        for (int k = 1; k < n; ++k) {
            GrassmannShape shape(k, n);
            CohomologyTable table = cohomology(shape, FillVariant::standard);
            IntPolynomial poincare = poincare_polynomial(shape);
            long long alternating = 0;
            for (int j = 0; j <= shape.dimension(); ++j) {
                int betti = table.groups[static_cast<size_t>(j)].free_rank;
                expect(poincare.coefficient(j) == betti,
                       "Betti mismatch for " + shape_name(k, n) + " at degree " +
                           std::to_string(j),
                       errors);
                alternating += (j % 2 == 0 ? 1 : -1) * static_cast<long long>(betti);
            }
            ParityCase pc = classify_parity(shape);
            long long chi = pc.case_one ? binomial(pc.m, pc.j) : 0;
            expect(euler_characteristic(shape) == chi && alternating == chi,
                   "Euler characteristic mismatch for " + shape_name(k, n), errors);
        }
    }
}

// ---- criterion 7: SNF oracle equivalence ------------------------------------

void criterion_oracle(std::string& errors) {
    for (int n = 2; n <= 8; ++n) {
        for (int k = 1; k < n; ++k) {
            GrassmannShape shape(k, n);
            for (FillVariant variant : {FillVariant::standard, FillVariant::shifted}) {
                try {
                    // Asserts delta.delta = 0, torsion factors 2, fast-path equality.
                    CohomologyTable oracle = cohomology_snf_oracle(shape, variant);
                    expect(oracle.groups == cohomology(shape, variant).groups,
                           "oracle table differs for " + shape_name(k, n), errors);
                } catch (const std::exception& err) {
                    expect(false, shape_name(k, n) + ": " + err.what(), errors);
                }
            }
        }
    }
}

// ---- criterion 8: sign dynamics ----------------------------------------------

void criterion_sign_dynamics(std::string& errors) {
    for (int n = 2; n <= 8; ++n) {
        for (int k = 1; k < n; ++k) {
            GrassmannShape shape(k, n);
            for (int degree = 0; degree <= shape.dimension(); ++degree) {
                for (const Partition& cell : enumerate_cells(shape, degree)) {
                    expect(eta_hat(cell, shape, FillVariant::standard).eta_hat ==
                               eta(cell, shape),
                           "eta_hat != eta at " + to_string(cell) + " in " + shape_name(k, n),
                           errors);
                    expect(eta_hat(cell, shape, FillVariant::shifted).eta_hat ==
                               eta_star(cell, shape),
                           "eta_hat != eta* at " + to_string(cell) + " in " + shape_name(k, n),
                           errors);
                }
            }
        }
    }
    for (int n = 2; n <= 7; ++n) {
        for (int k = 1; k < n; ++k) {
            GrassmannShape shape(k, n);
            for (int degree = 0; degree <= shape.dimension(); ++degree) {
                for (const Partition& cell : enumerate_cells(shape, degree)) {
                    auto words = lattice_paths(cell, shape, 50);
                    for (FillVariant variant : {FillVariant::standard, FillVariant::shifted}) {
                        int reference = eta_hat(cell, shape, variant, words.front()).eta_hat;
                        for (const auto& word : words)
                            expect(eta_hat(cell, shape, variant, word).eta_hat == reference,
                                   "path dependence at " + to_string(cell) + " in " +
                                       shape_name(k, n),
                                   errors);
                    }
                }
            }
        }
    }
}

// ---- criterion 9: edge partition and orientability ---------------------------

void criterion_edges_orientability(std::string& errors) {
    for (int n = 2; n <= 9; ++n) {
        for (int k = 1; k < n; ++k) {
            GrassmannShape shape(k, n);
            WeightedLattice standard = classify_edges(shape, FillVariant::standard);
            WeightedLattice shifted = classify_edges(shape, FillVariant::shifted);
            for (size_t e = 0; e < standard.graph.edges.size(); ++e)
                expect(standard.is_double(e) != shifted.is_double(e),
                       "edge partition fails in " + shape_name(k, n), errors);
            try {
                expect(is_orientable(shape) == (n % 2 == 0),
                       "orientability parity for " + shape_name(k, n), errors);
            } catch (const std::exception& err) {
                expect(false, shape_name(k, n) + ": " + err.what(), errors);
            }
        }
    }
}

// ---- criterion 10: reciprocity ------------------------------------------------

void criterion_reciprocity(std::string& errors) {
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k < n; ++k)
            expect(reciprocity_check(GrassmannShape(k, n)),
                   "reciprocity fails for " + shape_name(k, n), errors);
}

// ---- criterion 11: CLI golden runs --------------------------------------------

int run_cli(const std::string& args, std::string& output) {
    fs::path capture = fs::temp_directory_path() / "grassmann_cli_capture.txt";
    std::string command = std::string(GRASSMANN_CLI_PATH) + " " + args + " > " +
                          capture.string() + " 2>/dev/null";
    int status = std::system(command.c_str());
    std::ifstream stream(capture);
    std::ostringstream collected;
    collected << stream.rdbuf();
    output = collected.str();
    fs::remove(capture);
    if (status == -1) return -1;
    return WEXITSTATUS(status);
}

void criterion_cli_golden(std::string& errors) {
    const std::vector<std::pair<int, int>> shapes = {{2, 5}, {3, 6}, {1, 4}};
    for (auto [k, n] : shapes) {
        std::string kn = std::to_string(k) + " " + std::to_string(n);
        for (const std::string& args :
             {"cohomology " + kn, "cohomology " + kn + " --coefficients twisted",
              "poly " + kn, "graph " + kn + " --format json", "graph " + kn + " --format dot"}) {
            std::string first, second;
            int code_first = run_cli(args, first);
            int code_second = run_cli(args, second);
            expect(code_first == 0 && code_second == 0,
                   "`" + args + "` exited " + std::to_string(code_first) + "/" +
                       std::to_string(code_second),
                   errors);
            expect(!first.empty() && first == second, "`" + args + "` output not byte-stable",
                   errors);
        }
    }
    std::string report;
    int code = run_cli("verify --max-n 8", report);
    expect(code == 0, "verify --max-n 8 exited " + std::to_string(code), errors);
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "Gr(2,5) constant-coefficient cohomology table", 1.0, criterion_gr25_constant},
        {2, "Gr(2,5) twisted table and homology reversal", 1.0, criterion_gr25_twisted},
        {3, "projective-space tables for n <= 12, both coefficient systems", 5.0,
         criterion_projective},
        {4, "cell sums equal closed forms (n <= 10; shifted for odd n <= 11)", 30.0,
         criterion_polynomial_forms},
        {5, "point-count examples", 30.0, criterion_point_counts},
        {6, "Betti numbers equal Poincare coefficients, Euler characteristic (n <= 10)", 120.0,
         criterion_betti},
        {7, "SNF oracle equals fast path, torsion 2, delta.delta = 0 (n <= 8)", 300.0,
         criterion_oracle},
        {8, "sign dynamics equal checkered weights (n <= 8), path independence (n <= 7)", 120.0,
         criterion_sign_dynamics},
        {9, "edge partition (n <= 9) and orientability witness", 60.0,
         criterion_edges_orientability},
        {10, "reciprocity identity (n <= 10)", 30.0, criterion_reciprocity},
        {11, "CLI byte-stable outputs and verify --max-n 8", 300.0, criterion_cli_golden},
    };

    bool all_ok = true;
    for (const Criterion& criterion : criteria) {
        std::string errors;
        auto start = std::chrono::steady_clock::now();
        try {
            criterion.body(errors);
        } catch (const std::exception& err) {
            if (!errors.empty()) errors += "; ";
            errors += err.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > criterion.budget_seconds) {
            if (!errors.empty()) errors += "; ";
            errors += "exceeded " + std::to_string(criterion.budget_seconds) + "s budget";
        }
        bool ok = errors.empty();
        all_ok = all_ok && ok;
        std::printf("%s  criterion %2d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL",
                    criterion.number, criterion.title.c_str(), seconds,
                    ok ? "" : " -- ", errors.c_str());
    }
    return all_ok ? 0 : 1;
}
