#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "katzsum/error.hpp"
#include "katzsum/harness.hpp"
#include "katzsum/katz.hpp"

namespace katzsum {

namespace {

using nlohmann::json;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json check_json(const CheckReport& r) {
    return json{
        {"check_id", r.check_id},
        {"q", r.q},
        {"a", r.a ? json(*r.a) : json(nullptr)},
        {"instances", r.instances},
        {"max_abs_err", r.max_abs_err},
        {"max_scaled_err", r.max_scaled_err},
        {"tol", r.tol},
        {"pass", r.pass},
        {"worst",
         {{"instance", r.worst.label},
          {"lhs", {r.worst.lhs.real(), r.worst.lhs.imag()}},
          {"rhs", {r.worst.rhs.real(), r.worst.rhs.imag()}}}},
    };
}

json field_json(const FieldRun& f) {
    json runs = json::array();
    for (const auto& r : f.runs) runs.push_back(check_json(r));
    return json{
        {"field",
         {{"p", f.params.p},
          {"n", f.params.n},
          {"q", f.params.q},
          {"modulus", f.params.modulus},
          {"generator", f.generator}}},
        {"runs", std::move(runs)},
    };
}

}  // namespace

std::string report_json(const RunResult& result) {
    // One field: the field object itself; several: an array of them in run order.
    if (result.fields.size() == 1) return field_json(result.fields.front()).dump(2) + "\n";
    json all = json::array();
    for (const auto& f : result.fields) all.push_back(field_json(f));
    return all.dump(2) + "\n";
}

std::string report_csv(const RunResult& result) {
    std::ostringstream os;
    os << "check_id,p,n,q,a,instances,worst_instance,lhs_re,lhs_im,rhs_re,rhs_im,max_abs_err,max_scaled_err,tol,pass\n";
    for (const auto& f : result.fields) {
        for (const auto& r : f.runs) {
            os << r.check_id << ',' << f.params.p << ',' << f.params.n << ',' << r.q << ',';
            if (r.a) os << *r.a;
            os << ',' << r.instances << ",\"" << r.worst.label << "\"," << num(r.worst.lhs.real()) << ','
               << num(r.worst.lhs.imag()) << ',' << num(r.worst.rhs.real()) << ',' << num(r.worst.rhs.imag()) << ','
               << num(r.max_abs_err) << ',' << num(r.max_scaled_err) << ',' << num(r.tol) << ','
               << (r.pass ? "true" : "false") << '\n';
        }
    }
    return os.str();
}

void emit_report(const RunResult& result, ReportFormat format, const std::string& path) {
    const std::string body = format == ReportFormat::Json ? report_json(result) : report_csv(result);
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(Errc::IoError, "cannot open " + tmp.string());
        out << body;
        out.flush();
        if (!out) throw Error(Errc::IoError, "write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(Errc::IoError, "cannot move report into place at " + path);
    }
}

std::string table_csv(const SumsPtr& sums, std::uint32_t a, bool p_table) {
    const KatzContext ctx = make_context(sums, sums->field().elem(a));
    const std::uint32_t q = sums->field().q();
    std::ostringstream os;
    if (p_table) {
        const PTable t = build_p_table(ctx);
        os << "j,k,re,im\n";
        for (std::uint32_t j = 0; j < q; ++j) {
            for (std::uint32_t k = 0; k < q; ++k) {
                const Complex v = t(FieldElem{j}, FieldElem{k});
                os << j << ',' << k << ',' << num(v.real()) << ',' << num(v.imag()) << '\n';
            }
        }
    } else {
        const auto v = build_v_table(ctx);
        os << "j,re,im\n";
        for (std::uint32_t j = 0; j < q; ++j) os << j << ',' << num(v[j].real()) << ',' << num(v[j].imag()) << '\n';
    }
    return os.str();
}

}  // namespace katzsum
