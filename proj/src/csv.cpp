#include "gotco/csv.hpp"

#include <iomanip>
#include <ios>

namespace gotco {

namespace {

// Fixed formatting so repeated runs are byte-identical.
struct Precise {
    double value;
};
std::ostream& operator<<(std::ostream& out, Precise p) {
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(12) << std::defaultfloat << p.value;
    out.flags(flags);
    out.precision(precision);
    return out;
}

}  // namespace

std::string format_policy(const DecisionPolicy& policy) {
    std::string s;
    for (std::size_t i = 0; i < policy.actions.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(policy.actions[i]);
    }
    return s;
}

void write_trace_csv(std::ostream& out, std::span<const TraceRow> trace) {
    out << "t,x,x_hat,phi,a_S,a_A,h,aoi,aoci,aoii,got,slot_cost\n";
    for (const TraceRow& r : trace)
        out << r.t << ',' << r.x << ',' << r.x_hat << ',' << r.phi << ',' << int(r.a_s) << ',' << r.a_a << ','
            << int(r.h) << ',' << r.aoi << ',' << r.aoci << ',' << r.aoii << ',' << Precise{r.got} << ','
            << Precise{r.slot_cost} << '\n';
}

void write_frontier_csv(std::ostream& out, std::span<const FrontierRow> rows) {
    out << "label,param,sampling_rate,avg_cost,stderr_cost,horizon,seeds\n";
    for (const FrontierRow& r : rows)
        out << r.label << ',' << r.param << ',' << Precise{r.sampling_rate} << ',' << Precise{r.avg_cost} << ','
            << Precise{r.stderr_cost} << ',' << r.horizon << ',' << r.seeds << '\n';
}

void write_audit_csv(std::ostream& out, std::span<const CandidateResult> candidates) {
    out << "candidate,pi_a,theta,iterations\n";
    for (const CandidateResult& c : candidates)
        out << c.index << ',' << format_policy(c.decision) << ',' << Precise{c.theta} << ',' << c.iterations
            << '\n';
}

void write_values_csv(std::ostream& out, const StateSpace& space, const RviSolution& solution) {
    out << "x,x_hat,phi,value,a_S\n";
    for (std::size_t i = 0; i < space.size(); ++i) {
        const GlobalState w = space.unflat(i);
        out << w.x << ',' << w.x_hat << ',' << w.phi << ',' << Precise{solution.values[i]} << ','
            << int(solution.sampler.actions[i]) << '\n';
    }
}

}  // namespace gotco
