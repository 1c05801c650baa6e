#include "dpda/telemetry.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "dpda/errors.hpp"

namespace dpda::train {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw InputError("csv: bad float field '" + s + "'");
    return v;
}

int parse_int(const std::string& s) {
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end == s.c_str()) throw InputError("csv: bad int field '" + s + "'");
    return static_cast<int>(v);
}

std::vector<std::string> read_lines(const std::string& path,
                                    const std::string& expected_header) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::string header;
    if (!std::getline(in, header) || header != expected_header)
        throw InputError(path + ": unexpected header");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

constexpr const char* kIterHeader =
    "epoch,iter,loss_orig,loss_aug,grad_norm_orig,grad_norm_aug,cosine,"
    "conflict,alignment_applied";
constexpr const char* kEpochHeader =
    "epoch,iters,conflict_count,train_loss_orig,train_loss_aug,val_loss,"
    "val_eer";

} // namespace

std::string fmt_g17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_iterations_csv(const std::string& path,
                          const std::vector<IterationRecord>& records) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << kIterHeader << '\n';
    for (const auto& r : records) {
        out << r.epoch << ',' << r.iter << ',' << fmt_g17(r.loss_orig) << ','
            << fmt_g17(r.loss_aug) << ',' << fmt_g17(r.grad_norm_orig) << ','
            << fmt_g17(r.grad_norm_aug) << ',' << fmt_g17(r.cosine) << ','
            << (r.conflict ? 1 : 0) << ',' << (r.alignment_applied ? 1 : 0)
            << '\n';
    }
}

std::vector<IterationRecord> read_iterations_csv(const std::string& path) {
    std::vector<IterationRecord> records;
    for (const auto& line : read_lines(path, kIterHeader)) {
        const auto f = split_csv_line(line);
        if (f.size() != 9) throw InputError(path + ": bad row '" + line + "'");
        IterationRecord r;
        r.epoch = parse_int(f[0]);
        r.iter = parse_int(f[1]);
        r.loss_orig = parse_double(f[2]);
        r.loss_aug = parse_double(f[3]);
        r.grad_norm_orig = parse_double(f[4]);
        r.grad_norm_aug = parse_double(f[5]);
        r.cosine = parse_double(f[6]);
        r.conflict = parse_int(f[7]) != 0;
        r.alignment_applied = parse_int(f[8]) != 0;
        records.push_back(r);
    }
    return records;
}

void write_epochs_csv(const std::string& path,
                      const std::vector<EpochRecord>& records) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << kEpochHeader << '\n';
    for (const auto& r : records) {
        out << r.epoch << ',' << r.iters << ',' << r.conflict_count << ','
            << fmt_g17(r.train_loss_orig) << ',' << fmt_g17(r.train_loss_aug)
            << ',' << fmt_g17(r.val_loss) << ',' << fmt_g17(r.val_eer) << '\n';
    }
}

std::vector<EpochRecord> read_epochs_csv(const std::string& path) {
    std::vector<EpochRecord> records;
    for (const auto& line : read_lines(path, kEpochHeader)) {
        const auto f = split_csv_line(line);
        if (f.size() != 7) throw InputError(path + ": bad row '" + line + "'");
        EpochRecord r;
        r.epoch = parse_int(f[0]);
        r.iters = parse_int(f[1]);
        r.conflict_count = parse_int(f[2]);
        r.train_loss_orig = parse_double(f[3]);
        r.train_loss_aug = parse_double(f[4]);
        r.val_loss = parse_double(f[5]);
        r.val_eer = parse_double(f[6]);
        records.push_back(r);
    }
    return records;
}

} // namespace dpda::train
