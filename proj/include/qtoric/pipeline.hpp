#pragma once

#include <cstdio>
#include <sstream>
#include <string>

#include "qtoric/config.hpp"
#include "qtoric/delzant.hpp"
#include "qtoric/verify.hpp"

namespace qtoric {

/// Exit code taxonomy of the batch pipeline. Every failure mode maps to
/// exactly one code.
enum class ExitCode : int {
    Ok = 0,
    UsageError = 1,
    ParseError = 2,
    DegenerateInput = 3,  // empty, unbounded, or lower-dimensional polytope
    NotSimple = 4,
    NotRegular = 5,
    InternalError = 6,
};

enum class FaceSelection { Vertices, All };

struct PipelineResult {
    std::string report;  // structured text, fixed key order, LF line endings
    std::string csv;     // one row per sample, only when emit_samples is set
    ExitCode code = ExitCode::Ok;
    SpaceClass space_class = SpaceClass::Manifold;
};

namespace detail {

inline std::string fmt_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string fmt_face(const std::vector<std::size_t>& F) {
    std::string s = "{";
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(F[i] + 1);  // 1-based facet indices in reports
    }
    return s + "}";
}

inline std::string fmt_group(const IsotropyGroup& G) {
    if (G.trivial()) return "trivial";
    std::string s;
    for (std::size_t i = 0; i < G.invariant_factors.size(); ++i) {
        if (i) s += " x ";
        s += "Z/" + std::to_string(G.invariant_factors[i]);
    }
    if (G.free_rank > 0) {
        if (!s.empty()) s += " x ";
        s += "Z^" + std::to_string(G.free_rank);
    }
    return s;
}

}  // namespace detail

/// Run the full construction on a parsed config and render the report.
/// Throws nothing: failures are encoded in the exit code and report text.
inline PipelineResult run_pipeline(const ProblemConfig& cfg,
                                   FaceSelection faces = FaceSelection::Vertices) {
    using detail::fmt_double;
    PipelineResult result;
    std::ostringstream out;

    try {
        Polytope P(cfg.ambient_dim, cfg.halfspaces);
        try {
            P.build();
        } catch (const EmptyPolytope& e) {
            out << "error = " << e.what() << "\n";
            result.report = out.str();
            result.code = ExitCode::DegenerateInput;
            return result;
        } catch (const Unbounded& e) {
            out << "error = " << e.what() << "\n";
            result.report = out.str();
            result.code = ExitCode::DegenerateInput;
            return result;
        } catch (const LowerDimensional& e) {
            out << "error = " << e.what() << "\n";
            result.report = out.str();
            result.code = ExitCode::DegenerateInput;
            return result;
        }

        out << "ambient_dim = " << cfg.ambient_dim << "\n";
        out << "discriminant = " << cfg.discriminant << "\n";
        out << "facets = " << P.facet_count() << "\n";
        out << "vertices = " << P.vertices().size() << "\n";
        for (const Vertex& v : P.vertices()) {
            out << "vertex " << detail::fmt_face(v.active) << " =";
            for (const FieldScalar& c : v.coords) out << " " << c.str();
            out << " ~";
            for (const FieldScalar& c : v.coords) out << " " << fmt_double(c.to_double());
            out << "\n";
        }

        SimplicityReport simp = P.check_simple();
        out << "simple = " << (simp.is_simple ? "yes" : "no") << "\n";
        if (!simp.is_simple) {
            for (std::size_t i : simp.offending)
                out << "non_simple_vertex = " << detail::fmt_face(P.vertices()[i].active) << "\n";
            result.report = out.str();
            result.code = ExitCode::NotSimple;
            return result;
        }

        DelzantData D(P);
        const Quasilattice& Q = D.quasilattice();
        out << "quasilattice_rank = " << Q.q_rank << "\n";
        out << "is_lattice = " << (Q.is_lattice() ? "yes" : "no") << "\n";
        out << "relation_lattice_rank = " << Q.relations.rows() << "\n";
        out << "ambient_torus_rank = " << D.ambient_rank() << "\n";
        out << "subgroup_dim = " << D.subgroup_dim() << "\n";
        out << "dim_M = " << D.reduced_dim() << "\n";

        RegularityCertificate cert = D.check_regular_value();
        out << "regular_value = " << (cert.regular ? "yes" : "no") << "\n";
        if (!cert.regular) {
            out << "irregular_face = " << detail::fmt_face(cert.offending_face) << "\n";
            result.report = out.str();
            result.code = ExitCode::NotRegular;
            return result;
        }

        std::vector<std::vector<std::size_t>> face_list;
        if (faces == FaceSelection::All) {
            face_list = enumerate_faces(P);
        } else {
            for (const Vertex& v : P.vertices()) face_list.push_back(v.active);
        }
        out << "isotropy_definition = (Q ∩ span{X_F}) / Z-span{X_F}\n";
        Classification cls = classify(Q, face_list);
        for (const IsotropyGroup& G : cls.evidence)
            out << "isotropy " << detail::fmt_face(G.face) << " = " << detail::fmt_group(G)
                << "\n";
        out << "classification = " << to_string(cls.space_class) << "\n";
        result.space_class = cls.space_class;

        SampleReport rep = certify_moment_image(D, cfg.samples, cfg.seed, cfg.tolerance,
                                                !cfg.emit_samples.empty());
        out << "samples = " << rep.samples << "\n";
        out << "seed = " << rep.seed << "\n";
        out << "max_roundtrip_error = " << fmt_double(rep.max_roundtrip_error) << "\n";
        out << "max_level_residual = " << fmt_double(rep.max_level_residual) << "\n";
        for (std::size_t i = 0; i < rep.sampled_extent.size(); ++i)
            out << "moment_extent_" << (i + 1) << " = ["
                << fmt_double(rep.sampled_extent[i].first) << ", "
                << fmt_double(rep.sampled_extent[i].second) << "]\n";
        for (std::size_t i = 0; i < rep.extent_gap.size(); ++i)
            out << "extent_gap_" << (i + 1) << " = " << fmt_double(rep.extent_gap[i]) << "\n";
        for (std::size_t v = 0; v < rep.vertex_min_distance.size(); ++v)
            out << "vertex_min_distance_" << (v + 1) << " = "
                << fmt_double(rep.vertex_min_distance[v]) << "\n";

        if (!cfg.emit_samples.empty()) {
            std::ostringstream csv;
            for (std::size_t i = 0; i < cfg.ambient_dim; ++i)
                csv << (i ? "," : "") << "mu_" << (i + 1);
            csv << "\n";
            for (const auto& row : rep.kept_samples) {
                for (std::size_t i = 0; i < row.size(); ++i)
                    csv << (i ? "," : "") << fmt_double(row[i]);
                csv << "\n";
            }
            result.csv = csv.str();
        }
    } catch (const Error& e) {
        out << "error = " << e.what() << "\n";
        result.report = out.str();
        result.code = ExitCode::InternalError;
        return result;
    }

    result.report = out.str();
    return result;
}

}  // namespace qtoric
