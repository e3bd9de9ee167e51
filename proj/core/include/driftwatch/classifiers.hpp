#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "driftwatch/types.hpp"

namespace driftwatch {

/// Binary training set: rows of features with labels 1 = target family,
/// 0 = other family. Both classes must be present.
struct TrainingSet {
  Matrix features;
  std::vector<int> labels;
  void validate() const;
};

enum class ModelKind { mlp, linear_svm, random_forest, gbt };
std::string to_string(ModelKind kind);
ModelKind model_kind_from_string(const std::string& name);

enum class Activation { relu, tanh };
enum class Solver { adam, sgd };

struct LinearSvmModel {
  std::vector<double> weights;
  double bias = 0.0;
};

struct MlpLayer {
  Matrix weights;  // out x in
  std::vector<double> bias;
};

struct MlpModel {
  std::vector<MlpLayer> layers;  // hidden layers then the sigmoid output
  Activation activation = Activation::relu;
};

/// Node of an axis-aligned binary tree. Leaves carry a class label
/// (classification) or a real value (regression); internal nodes route
/// feature < threshold to left.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  int label = -1;
  double value = 0.0;
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
};

struct ForestModel {
  std::vector<Tree> trees;
};

struct GbtModel {
  std::vector<Tree> trees;
  double base_score = 0.0;  // log-odds of the class prior
  double learning_rate = 0.1;
  std::vector<double> train_loss_trace;  // mean logistic loss per stage
};

struct TrainedModel {
  ModelKind kind = ModelKind::linear_svm;
  nlohmann::json hyperparams;
  std::uint64_t train_seed = 0;
  std::size_t input_dim = 0;
  std::variant<LinearSvmModel, MlpModel, ForestModel, GbtModel> params;
};

/// One label per row; pure function of (model, input). Throws on feature
/// dimension mismatch; an empty matrix yields an empty list.
std::vector<int> predict(const TrainedModel& model, const Matrix& features);

/// Fraction of rows predicted correctly.
double accuracy(const TrainedModel& model, const Matrix& features,
                const std::vector<int>& labels);

/// Linear decision function fit by guarded subgradient descent on the
/// L2-regularized hinge loss 0.5|w|^2 + C sum max(0, 1 - y f(x)). Steps that
/// fail to improve the objective are backtracked, so the per-epoch objective
/// is non-increasing; stops when the improvement falls below tol.
TrainedModel train_linear_svm(const TrainingSet& data, double C, double tol,
                              std::size_t max_epochs, std::uint64_t seed);

/// Feedforward net with the given hidden sizes, sigmoid output and
/// cross-entropy loss, trained by Adam (beta1 0.9, beta2 0.999, lr 1e-3)
/// or plain SGD in mini-batches of min(32, n).
TrainedModel train_mlp(const TrainingSet& data,
                       const std::vector<std::size_t>& hidden_sizes,
                       Activation activation, std::size_t max_iter,
                       std::uint64_t seed, Solver solver = Solver::adam);

/// Bagged CART trees: bootstrap sample per tree, sqrt(dim) random feature
/// candidates per split, Gini impurity, majority vote at prediction.
TrainedModel train_random_forest(const TrainingSet& data,
                                 std::size_t n_estimators,
                                 std::size_t max_depth,
                                 std::size_t min_samples_split,
                                 std::size_t min_samples_leaf,
                                 std::uint64_t seed);

/// Stagewise regression trees on logistic-loss gradients with Newton leaf
/// values, shrunk by learning_rate; the initial score is the prior log-odds.
TrainedModel train_gbt(const TrainingSet& data, std::size_t n_estimators,
                       std::size_t max_depth, double learning_rate,
                       std::uint64_t seed);

/// Trains by kind with hyperparameters given as JSON; missing fields take
/// the shipped defaults.
TrainedModel train_model(ModelKind kind, const TrainingSet& data,
                         const nlohmann::json& hyperparams,
                         std::uint64_t seed);

nlohmann::json model_to_json(const TrainedModel& model);
TrainedModel model_from_json(const nlohmann::json& j);

// MLP introspection used by the finite-difference gradient check.
double mlp_loss(const MlpModel& model, const Matrix& X,
                const std::vector<int>& y);
std::vector<double> mlp_flatten(const MlpModel& model);
void mlp_unflatten(MlpModel& model, const std::vector<double>& flat);
std::vector<double> mlp_loss_gradient(const MlpModel& model, const Matrix& X,
                                      const std::vector<int>& y);

/// Ordered hyperparameter grid; the search iterates the product with the
/// last dimension varying fastest, and ties keep the earliest combination.
struct HyperGrid {
  std::vector<std::pair<std::string, std::vector<nlohmann::json>>> dimensions;
};

/// The shipped per-kind grids (MLP hidden sizes/iters/activation/solver,
/// SVM C/tol, forest and boosting shape parameters).
HyperGrid default_grid(ModelKind kind);

struct GridSearchResult {
  nlohmann::json best_params;
  TrainedModel model;
  double validation_accuracy = 0.0;
};

/// Exhaustive product over the grid; best validation accuracy wins.
GridSearchResult grid_search(ModelKind kind, const HyperGrid& grid,
                             const TrainingSet& train,
                             const TrainingSet& validation,
                             std::uint64_t seed);

}  // namespace driftwatch
