// Benchmark: parallel vs serial Reisner Cohen-Macaulay check.
//
// The parallel version distributes the per-link homology computations with
// OpenMP; the serial version is the reference. Both must agree on every run.

#include <chrono>
#include <cstdio>
#include <vector>

#include "ktoric/simplicial.hpp"

using namespace ktoric;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0)
{
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

// k-skeleton of the simplex on n vertices: Cohen-Macaulay, with many links.
SimplicialComplex skeleton(int n, int k)
{
    std::vector<Face> facets;
    for (Face f = 0; f < (Face(1) << n); ++f)
        if (face_size(f) == k + 1)
            facets.push_back(f);
    return SimplicialComplex(n, std::move(facets));
}

// Boundary of the cross-polytope (n antipodal vertex pairs): a simplicial
// sphere, so Cohen-Macaulay over every field.
SimplicialComplex cross_polytope(int n)
{
    std::vector<Face> facets;
    for (int pick = 0; pick < (1 << n); ++pick) {
        std::vector<int> vs;
        for (int i = 0; i < n; ++i)
            vs.push_back(2 * i + ((pick >> i) & 1));
        facets.push_back(face_of(vs));
    }
    return SimplicialComplex(2 * n, std::move(facets));
}

void bench(const char* name, const SimplicialComplex& k, const CoeffField& field)
{
    auto t0 = clock_type::now();
    bool serial = is_cohen_macaulay_serial(k, field);
    double ts = seconds_since(t0);

    t0 = clock_type::now();
    bool parallel = is_cohen_macaulay(k, field);
    double tp = seconds_since(t0);

    std::printf("%-28s %-4s cm=%d serial %8.3fs parallel %8.3fs speedup %.2fx%s\n",
                name, field.label().c_str(), serial ? 1 : 0, ts, tp,
                tp > 0 ? ts / tp : 0.0, serial == parallel ? "" : "  MISMATCH");
    if (serial != parallel)
        std::exit(1);
}

}  // namespace

int main()
{
    std::vector<CoeffField> fields = {CoeffField::Q(), CoeffField::Fp(2)};
    for (const auto& f : fields) {
        bench("skeleton(10, 4)", skeleton(10, 4), f);
        bench("skeleton(12, 3)", skeleton(12, 3), f);
        bench("cross_polytope(6)", cross_polytope(6), f);
        bench("cross_polytope(7)", cross_polytope(7), f);
    }
    return 0;
}
