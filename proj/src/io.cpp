#include "rabi/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

namespace rabi {

std::string format_double(double x)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

const char* branch_name(Branch b)
{
    return b == Branch::minus ? "minus" : "plus";
}

}  // namespace

std::string to_csv(const SweepTable& table)
{
    std::string out = "g,method,rank,branch,N,energy_over_omega0\n";
    for (const SweepRow& r : table.rows) {
        out += format_double(r.g);
        out += ',';
        out += method_name(r.method);
        out += ',';
        out += std::to_string(r.rank);
        out += ',';
        if (r.labeled) {
            out += branch_name(r.branch);
            out += ',';
            out += std::to_string(r.n);
        } else {
            out += ',';
        }
        out += ',';
        out += format_double(r.energy_over_omega0);
        out += '\n';
    }
    return out;
}

std::string to_json(const SweepTable& table)
{
    nlohmann::ordered_json spec;
    spec["omega0"] = table.spec.omega0;
    spec["Omega"] = table.spec.Omega;
    spec["gmin"] = table.spec.gmin;
    spec["gmax"] = table.spec.gmax;
    spec["steps"] = table.spec.steps;
    spec["levels"] = table.spec.levels;
    nlohmann::ordered_json methods = nlohmann::ordered_json::array();
    for (ApproxMethod m : table.spec.normalized_methods()) methods.push_back(method_name(m));
    spec["methods"] = methods;
    spec["policy"] = {{"initial_nmax", table.spec.policy.initial_nmax},
                      {"max_solves", table.spec.policy.max_solves},
                      {"tol_factor", table.spec.policy.tol_factor}};

    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const SweepRow& r : table.rows) {
        nlohmann::ordered_json row;
        row["g"] = r.g;
        row["method"] = method_name(r.method);
        row["rank"] = r.rank;
        if (r.labeled) {
            row["branch"] = branch_name(r.branch);
            row["N"] = r.n;
        } else {
            row["branch"] = nullptr;
            row["N"] = nullptr;
        }
        row["energy_over_omega0"] = r.energy_over_omega0;
        rows.push_back(std::move(row));
    }

    nlohmann::ordered_json doc;
    doc["spec"] = std::move(spec);
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

void write_output(const std::string& path, const std::string& content)
{
    if (path.empty()) {
        if (std::fwrite(content.data(), 1, content.size(), stdout) != content.size())
            throw IoError("failed to write to stdout");
        std::fflush(stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open output file: " + path);
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw IoError("failed while writing: " + path);
}

}  // namespace rabi
