#include "cyc/output.hpp"

#include <json.hpp>

namespace cyc {

namespace {

nlohmann::json ratio_json(const Rational& q) {
    return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

} // namespace

OutputRecord make_record(const GroupSpec& spec, const Integer& num_cyclic,
                         const Integer& num_subgroups, const std::string& provenance) {
    return {spec.family(),  spec.param_strings(), num_cyclic,   num_subgroups,
            make_ratio(num_cyclic, num_subgroups), provenance,  std::nullopt,
            std::nullopt};
}

std::string to_json(const OutputRecord& record) {
    nlohmann::json j;
    j["family"] = record.family;
    j["params"] = record.params;
    j["num_cyclic"] = record.num_cyclic.get_str();
    j["num_subgroups"] = record.num_subgroups.get_str();
    j["cdeg"] = ratio_json(record.cdeg);
    j["cdeg_decimal"] = decimal_string(record.cdeg, 6);
    j["provenance"] = record.provenance;
    if (record.ndeg) {
        j["ndeg"] = ratio_json(*record.ndeg);
        j["ndeg_decimal"] = decimal_string(*record.ndeg, 6);
    }
    if (record.sd) {
        j["sd"] = ratio_json(*record.sd);
        j["sd_decimal"] = decimal_string(*record.sd, 6);
    }
    return j.dump(2) + "\n";
}

std::string to_csv(const OutputRecord& record) {
    std::string params;
    for (std::size_t i = 0; i < record.params.size(); ++i) {
        if (i) params += ' ';
        params += record.params[i];
    }
    std::string out = "family,params,num_cyclic,num_subgroups,cdeg_num,cdeg_den,cdeg_decimal,"
                      "provenance\n";
    out += record.family + ',' + params + ',' + record.num_cyclic.get_str() + ',' +
           record.num_subgroups.get_str() + ',' + record.cdeg.get_num().get_str() + ',' +
           record.cdeg.get_den().get_str() + ',' + decimal_string(record.cdeg, 6) + ',' +
           record.provenance + '\n';
    return out;
}

std::string to_human(const OutputRecord& record) {
    std::string params;
    for (std::size_t i = 0; i < record.params.size(); ++i) {
        if (i) params += ' ';
        params += record.params[i];
    }
    std::string out;
    out += "family: " + record.family + "\n";
    out += "params: " + params + "\n";
    out += "num_cyclic: " + record.num_cyclic.get_str() + "\n";
    out += "num_subgroups: " + record.num_subgroups.get_str() + "\n";
    out += "cdeg: " + format_ratio(record.cdeg) + " = " + decimal_string(record.cdeg, 6) + "\n";
    if (record.ndeg)
        out += "ndeg: " + format_ratio(*record.ndeg) + " = " + decimal_string(*record.ndeg, 6) +
               "\n";
    if (record.sd)
        out += "sd: " + format_ratio(*record.sd) + " = " + decimal_string(*record.sd, 6) + "\n";
    out += "provenance: " + record.provenance + "\n";
    return out;
}

std::string to_csv(const ExtremalReport& report) {
    std::string out = "alpha1,alpha2,num_cyclic,num_subgroups,cdeg_num,cdeg_den\n";
    for (const ExtremalRow& row : report.rows) {
        out += std::to_string(row.alpha1) + ',' + std::to_string(row.alpha2) + ',' +
               row.num_cyclic.get_str() + ',' + row.num_subgroups.get_str() + ',' +
               row.cdeg.get_num().get_str() + ',' + row.cdeg.get_den().get_str() + '\n';
    }
    return out;
}

std::string to_csv(const std::vector<ProfileRow>& rows) {
    std::string out = "x,partial_sum,residual,residual_over_log3\n";
    for (const ProfileRow& row : rows) {
        out += std::to_string(row.x) + ',' + fixed6(row.partial_sum) + ',' +
               fixed6(row.residual) + ',';
        out += row.log3_defined ? fixed6(row.residual_over_log3) : std::string("inf");
        out += '\n';
    }
    return out;
}

std::string fixed6(const mpf_class& value) {
    char* raw = nullptr;
    gmp_asprintf(&raw, "%.6Ff", value.get_mpf_t());
    std::string out(raw);
    void (*freefunc)(void*, std::size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, out.size() + 1);
    return out;
}

} // namespace cyc
