#pragma once

#include <string>
#include <vector>

namespace dpda::train {

// One row per optimization step. Losses, norms and cosine are the
// pre-alignment, pre-update statistics of the two input paths.
struct IterationRecord {
    int epoch = 0;
    int iter = 0;
    double loss_orig = 0.0;
    double loss_aug = 0.0;
    double grad_norm_orig = 0.0;
    double grad_norm_aug = 0.0;
    double cosine = 0.0;
    bool conflict = false;
    bool alignment_applied = false;
};

struct EpochRecord {
    int epoch = 0;
    int iters = 0;
    int conflict_count = 0;
    double train_loss_orig = 0.0; // mean over the epoch's iterations
    double train_loss_aug = 0.0;
    double val_loss = 0.0;
    double val_eer = 0.0;
};

// Fixed 17-significant-digit float formatting ("%.17g"); every float in
// the CSV outputs goes through this so reruns are byte-comparable.
std::string fmt_g17(double v);

// columns: epoch,iter,loss_orig,loss_aug,grad_norm_orig,grad_norm_aug,
//          cosine,conflict,alignment_applied        (bools as 0/1)
void write_iterations_csv(const std::string& path,
                          const std::vector<IterationRecord>& records);
std::vector<IterationRecord> read_iterations_csv(const std::string& path);

// columns: epoch,iters,conflict_count,train_loss_orig,train_loss_aug,
//          val_loss,val_eer
void write_epochs_csv(const std::string& path,
                      const std::vector<EpochRecord>& records);
std::vector<EpochRecord> read_epochs_csv(const std::string& path);

} // namespace dpda::train
