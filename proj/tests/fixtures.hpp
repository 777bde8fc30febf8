#pragma once

#include "ktoric/stackyfan.hpp"

namespace ktoric::fixtures {

inline LatticeElement fel(std::vector<long long> fr, std::vector<long long> tor = {})
{
    LatticeElement e;
    for (auto x : fr)
        e.free_part.emplace_back(x);
    for (auto x : tor)
        e.torsion_part.emplace_back(x);
    return e;
}

inline StackyFan p2()
{
    StackyFan f;
    f.lattice.free_rank = 2;
    f.rays = {fel({1, 0}), fel({0, 1}), fel({-1, -1})};
    f.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    return f;
}

inline StackyFan p1xp1()
{
    StackyFan f;
    f.lattice.free_rank = 2;
    f.rays = {fel({1, 0}), fel({0, 1}), fel({-1, 0}), fel({0, -1})};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return f;
}

inline StackyFan hirzebruch_f2()
{
    StackyFan f;
    f.lattice.free_rank = 2;
    f.rays = {fel({1, 0}), fel({0, 1}), fel({-1, 2}), fel({0, -1})};
    f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    return f;
}

inline StackyFan p112()
{
    StackyFan f;
    f.lattice.free_rank = 2;
    f.rays = {fel({1, 0}), fel({0, 1}), fel({-1, -2})};
    f.max_cones = {{0, 1}, {1, 2}, {2, 0}};
    return f;
}

// weighted projective stack P(1,1,1,1,2,2); ray 0 carries weight 1,
// rays 4 and 5 carry weight 2
inline StackyFan p111122()
{
    StackyFan f;
    f.lattice.free_rank = 5;
    f.rays = {fel({-1, -1, -1, -2, -2}), fel({1, 0, 0, 0, 0}), fel({0, 1, 0, 0, 0}),
              fel({0, 0, 1, 0, 0}),      fel({0, 0, 0, 1, 0}), fel({0, 0, 0, 0, 1})};
    for (int skip = 0; skip < 6; ++skip) {
        std::vector<int> cone;
        for (int i = 0; i < 6; ++i)
            if (i != skip)
                cone.push_back(i);
        f.max_cones.push_back(cone);
    }
    return f;
}

// the open substack of P(1,1,1,1,2,2) whose complex has minimal non-faces
// {0,1,2,3} and {4,5}
inline StackyFan borisov_open()
{
    StackyFan f = p111122();
    f.max_cones.clear();
    for (int skip = 0; skip < 4; ++skip)
        for (int top = 4; top <= 5; ++top) {
            std::vector<int> cone;
            for (int i = 0; i < 4; ++i)
                if (i != skip)
                    cone.push_back(i);
            cone.push_back(top);
            f.max_cones.push_back(cone);
        }
    return f;
}

inline StackyFan p1xp1_minus_2pts()
{
    StackyFan f = p1xp1();
    f.max_cones = {{0, 1}, {2, 3}};
    return f;
}

inline StackyFan gerbe_p1_z2()
{
    StackyFan f;
    f.lattice.free_rank = 1;
    f.lattice.torsion_invariants = {2};
    f.rays = {fel({1}, {1}), fel({-1}, {0})};
    f.max_cones = {{0}, {1}};
    return f;
}

}  // namespace ktoric::fixtures
