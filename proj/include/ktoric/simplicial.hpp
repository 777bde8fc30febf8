#pragma once

#include <cstdint>
#include <vector>

#include "ktoric/exactlinalg.hpp"

namespace ktoric {

/// Vertex subset as a bitmask; vertex i is bit i. Supports up to 63 vertices.
using Face = std::uint64_t;

int face_size(Face f);
std::vector<int> face_vertices(Face f);
Face face_of(const std::vector<int>& vertices);

/// Abstract simplicial complex given by its facets (inclusion-maximal faces).
/// The constructor deduplicates and prunes non-maximal input. A complex whose
/// only facet is the empty face is the irrelevant complex {empty}; no facets
/// at all is the void complex.
class SimplicialComplex {
public:
    SimplicialComplex(int vertex_count, std::vector<Face> facets);

    int vertex_count() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }

    /// max facet size - 1; -1 for {empty}, -2 for the void complex.
    int dimension() const;
    bool pure() const;
    bool is_face(Face f) const;
    /// All faces including the empty face (absent only for the void complex).
    std::vector<Face> all_faces() const;

    Int euler_characteristic() const;  // non-reduced: sum over nonempty faces

private:
    int n_ = 0;
    std::vector<Face> facets_;
};

/// Inclusion-minimal non-faces, sorted lexicographically by vertex list.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& k);

/// Reconstruct the complex whose non-faces are exactly the supersets of the
/// given sets (vertex_count <= 20).
SimplicialComplex complex_from_nonfaces(int vertex_count, const std::vector<Face>& nonfaces);

/// Link of a face (must be a face).
SimplicialComplex link(const SimplicialComplex& k, Face face);

/// Field of coefficients for homology dimensions.
struct CoeffField {
    bool rational = true;
    long long p = 0;
    static CoeffField Q() { return {true, 0}; }
    static CoeffField Fp(long long p);  // throws unless p is prime
    std::string label() const;
};

/// Reduced integral homology in degrees -1 .. dim(k) (empty list for the
/// void complex).
std::vector<FgAbelianGroup> reduced_homology(const SimplicialComplex& k);

/// Reduced Betti numbers over a field, degrees -1 .. dim(k).
std::vector<long long> reduced_betti(const SimplicialComplex& k, const CoeffField& field);

struct ShellabilityVerdict {
    enum class Status { Shellable, NotShellable, Undecided };
    Status status = Status::Undecided;
    std::vector<int> witness;  // facet ordering when shellable
    bool shellable() const { return status == Status::Shellable; }
};

/// Exhaustive shellability search for pure complexes (throws on non-pure
/// input). Returns Undecided when the facet count exceeds the cap.
ShellabilityVerdict is_shellable(const SimplicialComplex& k, int facet_cap = 12);

/// Reisner's criterion: every link has vanishing reduced homology below its
/// dimension, over the given field.
bool is_cohen_macaulay(const SimplicialComplex& k, const CoeffField& field);
/// Serial reference implementation of the same check.
bool is_cohen_macaulay_serial(const SimplicialComplex& k, const CoeffField& field);

}  // namespace ktoric
