#include "lugeo/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>

#include "lugeo/moment.hpp"
#include "lugeo/state.hpp"

namespace lugeo {

using nlohmann::json;

namespace {

json matrix_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back({{"re", m(i, j).real()}, {"im", m(i, j).imag()}});
        rows.push_back(std::move(row));
    }
    return rows;
}

json rvec_to_json(const RVec& v) {
    json out = json::array();
    for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

}  // namespace

json state_to_json(const PureState& state,
                   const std::optional<std::string>& label) {
    json j;
    j["dims"] = state.dims;
    json amps = json::array();
    for (long long i = 0; i < state.dim(); ++i)
        amps.push_back({{"re", state.amplitudes[i].real()},
                        {"im", state.amplitudes[i].imag()}});
    j["amplitudes"] = std::move(amps);
    if (label) j["label"] = *label;
    return j;
}

PureState state_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("amplitudes"))
        throw ParseError("state file needs dims and amplitudes");
    std::vector<int> dims;
    try {
        dims = j.at("dims").get<std::vector<int>>();
    } catch (const json::exception&) {
        throw ParseError("dims must be an array of integers");
    }
    if (dims.empty()) throw ParseError("dims must be nonempty");
    for (int d : dims)
        if (d < 1) throw ParseError("dims must be positive");

    const auto& amps_json = j.at("amplitudes");
    if (!amps_json.is_array()) throw ParseError("amplitudes must be an array");
    long long expected = 1;
    for (int d : dims) expected *= d;
    if (static_cast<long long>(amps_json.size()) != expected)
        throw ParseError("amplitude count does not match dims");

    Vec amps(expected);
    for (long long i = 0; i < expected; ++i) {
        const auto& a = amps_json.at(static_cast<size_t>(i));
        if (!a.is_object() || !a.contains("re") || !a.contains("im"))
            throw ParseError("each amplitude needs re and im");
        try {
            amps[i] = cxd(a.at("re").get<double>(), a.at("im").get<double>());
        } catch (const json::exception&) {
            throw ParseError("amplitude entries must be numbers");
        }
    }
    const double norm = amps.norm();
    if (std::abs(norm - 1.0) > 1e-6)
        std::cerr << "warning: input norm " << norm
                  << " deviates from 1; renormalizing\n";
    return make_state(std::move(dims), std::move(amps));
}

StateFile read_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("malformed JSON in " + path + ": " + e.what());
    }
    StateFile out{state_from_json(j), std::nullopt};
    if (j.contains("label") && j.at("label").is_string())
        out.label = j.at("label").get<std::string>();
    return out;
}

void write_state_file(const std::string& path, const PureState& state,
                      const std::optional<std::string>& label) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << state_to_json(state, label).dump(2) << "\n";
}

json analysis_report(const PureState& state, double tol, double rank_tol) {
    json j;
    j["dims"] = state.dims;
    j["tolerances"] = {{"tol", tol}, {"rank_tol", rank_tol}};

    json spectra = json::array();
    for (int k = 0; k < state.factors(); ++k) {
        const Mat rho = reduced_density(state, k).matrix;
        Eigen::SelfAdjointEigenSolver<Mat> eig(rho, Eigen::EigenvaluesOnly);
        RVec desc(rho.rows());
        for (int i = 0; i < rho.rows(); ++i)
            desc[i] = eig.eigenvalues()[rho.rows() - 1 - i];
        spectra.push_back(rvec_to_json(desc));
    }
    j["spectra"] = std::move(spectra);

    const MomentImage img = moment_image(state);
    json norms = json::array();
    for (const Mat& c : img.components) norms.push_back(c.norm());
    j["moment_norms"] = std::move(norms);
    j["moment_max_norm"] = img.max_norm();

    const OrbitReport report = classify(state, rank_tol);
    j["orbit"] = {{"dim_orbit", report.dim_orbit},
                  {"dim_coadjoint", report.dim_coadjoint},
                  {"degeneracy", report.degeneracy},
                  {"dim_orthocomplement", report.dim_orthocomplement},
                  {"classification", to_string(report.classification)}};

    if (state.factors() == 2 && state.dims[0] == state.dims[1]) {
        const SchmidtDecomposition sd = schmidt(state, tol);
        j["schmidt_coefficients"] = rvec_to_json(sd.coefficients);
        json prof;
        prof["m0"] = sd.multiplicities.m0;
        prof["nonzero"] = sd.multiplicities.nonzero;
        j["multiplicity_profile"] = std::move(prof);
        const BipartiteDims closed = bipartite_dims(sd.multiplicities);
        j["closed_form"] = {
            {"dim_orbit", closed.dim_orbit},
            {"dim_coadjoint", closed.dim_coadjoint},
            {"dim_orthocomplement", closed.dim_orthocomplement},
            {"degeneracy", closed.degeneracy}};
        j["notes"] = json::array(
            {"orthocomplement dimension computed as dim P(H) - dim O = "
             "2*m0^2 + sum(m_n^2) - 1; the sign of the middle term is fixed "
             "numerically against the rank computation"});
    }
    return j;
}

json verdict_to_json(const EquivalenceVerdict& verdict) {
    json j;
    j["status"] = to_string(verdict.status);
    j["method"] = verdict.method;
    if (!verdict.reason.empty()) j["reason"] = verdict.reason;
    if (verdict.objective >= 0) j["objective"] = verdict.objective;

    if (verdict.certificate.kind != CertificateKind::none) {
        const Certificate& c = verdict.certificate;
        json cert;
        cert["kind"] = to_string(c.kind);
        if (c.subsystem >= 0) cert["subsystem"] = c.subsystem;
        if (c.spectrum_x.size() > 0) cert["spectrum_x"] = rvec_to_json(c.spectrum_x);
        if (c.spectrum_y.size() > 0) cert["spectrum_y"] = rvec_to_json(c.spectrum_y);
        if (!c.multi_index.empty()) cert["multi_index"] = c.multi_index;
        if (!c.cycle.empty()) {
            cert["cycle"] = c.cycle;
            cert["support"] = c.support;
        }
        if (c.residual > 0) cert["residual"] = c.residual;
        j["certificate"] = std::move(cert);
    }
    if (verdict.witness) {
        json ws = json::array();
        for (const Mat& w : *verdict.witness) ws.push_back(matrix_to_json(w));
        j["witness"] = std::move(ws);
    }
    return j;
}

json sorted_form_report(const SortedTraceForm& form) {
    json j;
    j["state"] = state_to_json(form.state);
    json ws = json::array();
    for (const Mat& w : form.witnesses) ws.push_back(matrix_to_json(w));
    j["witnesses"] = std::move(ws);
    json spectra = json::array();
    for (const RVec& s : form.spectra) spectra.push_back(rvec_to_json(s));
    j["spectra"] = std::move(spectra);
    json blocks = json::array();
    for (const auto& b : form.blocks) blocks.push_back(b);
    j["degeneracy_blocks"] = std::move(blocks);
    return j;
}

}  // namespace lugeo
