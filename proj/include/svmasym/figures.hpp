#pragma once

// Coordinates published with the figures: theory curves and simulation mean/std markers.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "svmasym/errors.hpp"
#include "svmasym/model.hpp"

namespace svmasym::figures {

enum class SweepVar { Mu, Delta, Tau };

inline const char* to_string(SweepVar v) {
  switch (v) {
    case SweepVar::Mu: return "mu";
    case SweepVar::Delta: return "delta";
    case SweepVar::Tau: return "tau";
  }
  return "unknown";
}

struct Point {
  double x;
  double y;
};

struct SimPoint {
  double x;
  double mean;
  double sd;
};

/// Theory value of a curve at x, if the figure lists one.
inline std::optional<double> lookup(const std::vector<Point>& curve, double x) {
  for (const auto& p : curve)
    if (std::abs(p.x - x) <= 1e-9 * std::max(1.0, std::abs(x))) return p.y;
  return std::nullopt;
}

inline std::optional<SimPoint> lookup(const std::vector<SimPoint>& marks, double x) {
  for (const auto& p : marks)
    if (std::abs(p.x - x) <= 1e-9 * std::max(1.0, std::abs(x))) return p;
  return std::nullopt;
}

/// Critical ratio delta* against mu/sigma at balanced priors.
inline const std::vector<Point>& phase_boundary() {
  static const std::vector<Point> v = {
        {0.100000, 2.012767}, {0.200000, 2.051490}, {0.300000, 2.117461}, {0.400000, 2.212917}, {0.500000, 2.341184},
        {0.600000, 2.506868}, {0.700000, 2.716147}, {0.800000, 2.977167}, {0.900000, 3.300529}, {1.000000, 3.700023},
        {1.100000, 4.193603}, {1.200000, 4.804553}, {1.300000, 5.563407}, {1.400000, 6.510113}, {1.500000, 7.697465},
        {1.600000, 9.195418}, {1.700000, 11.097548}, {1.800000, 13.529333}, {1.900000, 16.660553}, {2.000000, 20.722920},
        {2.100000, 26.033251}, {2.200000, 33.030532}, {2.300000, 42.324067}, {2.400000, 54.769454}, {2.500000, 71.574029},
        {2.600000, 94.456163}, {2.700000, 125.879762}, {2.800000, 169.404105}, {2.900000, 230.218260}, {3.000000, 315.921855}};
  return v;
}

struct FigureSpec {
  int number = 0;
  bool hard = true;
  SweepVar sweep = SweepVar::Mu;
  ModelParams base;
  double tau = std::numeric_limits<double>::quiet_NaN();  // soft margin only
  std::vector<Point> rho, q0, err;
  std::vector<SimPoint> sim_cos, sim_norm, sim_err;

  /// Model parameters and penalty at sweep value x.
  ModelParams params_at(double x) const {
    ModelParams m = base;
    if (sweep == SweepVar::Mu) m.mu = x;
    if (sweep == SweepVar::Delta) m.delta = x;
    return m;
  }
  double tau_at(double x) const { return sweep == SweepVar::Tau ? x : tau; }

  /// Sweep values carrying simulation markers.
  std::vector<double> sim_grid() const {
    std::vector<double> g;
    for (const auto* v : {&sim_cos, &sim_norm, &sim_err})
      for (const auto& p : *v) {
        bool seen = false;
        for (double x : g) seen = seen || std::abs(x - p.x) <= 1e-9 * std::max(1.0, std::abs(x));
        if (!seen) g.push_back(p.x);
      }
    std::sort(g.begin(), g.end());
    return g;
  }

  /// Sweep values carrying any theory coordinate.
  std::vector<double> theory_grid() const {
    std::vector<double> g;
    for (const auto* v : {&rho, &q0, &err})
      for (const auto& p : *v) {
        bool seen = false;
        for (double x : g) seen = seen || std::abs(x - p.x) <= 1e-9 * std::max(1.0, std::abs(x));
        if (!seen) g.push_back(p.x);
      }
    std::sort(g.begin(), g.end());
    return g;
  }
};

inline const FigureSpec& figure2() {
  static const FigureSpec f = [] {
    FigureSpec s;
    s.number = 2;
    s.hard = true;
    s.sweep = SweepVar::Mu;
    s.base = ModelParams::balanced(2.1, 1.0, 2.0);
    s.tau = std::numeric_limits<double>::quiet_NaN();
    s.rho = {
        {0.100000, 0.079393}, {0.300000, 0.229386}, {0.500000, 0.358020}, {0.700000, 0.461860}, {0.900000, 0.543620},
        {1.100000, 0.607703}, {1.300000, 0.658363}, {1.500000, 0.698891}, {1.700000, 0.731778}, {1.900000, 0.758847},
        {2.100000, 0.781418}, {2.300000, 0.800448}, {2.500000, 0.816695}, {2.700000, 0.830669}, {2.900000, 0.842819},
        {3.100000, 0.853459}, {3.300000, 0.862846}, {3.500000, 0.871180}, {3.700000, 0.878624}, {3.900000, 0.885312},
        {4.100000, 0.891317}, {4.300000, 0.896787}, {4.500000, 0.901757}, {4.700000, 0.906318}, {4.900000, 0.910479}};
    s.q0 = {
        {0.700000, 5.659959}, {0.900000, 3.602824}, {1.100000, 2.544868}, {1.300000, 1.924015}, {1.500000, 1.525285},
        {1.700000, 1.251891}, {1.900000, 1.054920}, {2.100000, 0.907416}, {2.300000, 0.793481}, {2.500000, 0.703223},
        {2.700000, 0.630202}, {2.900000, 0.570070}, {3.100000, 0.519800}, {3.300000, 0.477220}, {3.500000, 0.440745},
        {3.700000, 0.409186}, {3.900000, 0.381638}, {4.100000, 0.357404}, {4.300000, 0.335935}, {4.500000, 0.316793},
        {4.700000, 0.299630}, {4.900000, 0.284161}};
    s.err = {
        {0.100000, 0.496833}, {0.300000, 0.472568}, {0.500000, 0.428965}, {0.700000, 0.373233}, {0.900000, 0.312330},
        {1.100000, 0.251916}, {1.300000, 0.196034}, {1.500000, 0.147242}, {1.700000, 0.106746}, {1.900000, 0.074678},
        {2.100000, 0.050401}, {2.300000, 0.032808}, {2.500000, 0.020589}, {2.700000, 0.012455}, {2.900000, 0.007259},
        {3.100000, 0.004076}, {3.300000, 0.002204}, {3.500000, 0.001148}, {3.700000, 0.000575}, {3.900000, 0.000277},
        {4.100000, 0.000129}, {4.300000, 0.000058}, {4.500000, 0.000025}, {4.700000, 0.000010}, {4.900000, 0.000004}};
    s.sim_cos = {
        {0.500000, 0.355081, 0.057828}, {1.300000, 0.656146, 0.031774}, {2.100000, 0.782139, 0.025958},
        {2.900000, 0.845220, 0.015475}, {3.700000, 0.877715, 0.014778}, {4.500000, 0.903221, 0.011098}};
    s.sim_norm = {
        {1.300000, 1.942461, 0.225534}, {2.100000, 0.913011, 0.057097}, {2.900000, 0.569401, 0.027160},
        {3.700000, 0.409894, 0.014909}, {4.500000, 0.316385, 0.008516}};
    s.sim_err = {
        {0.500000, 0.429058, 0.012297}, {1.300000, 0.197248, 0.013070}, {2.100000, 0.050890, 0.006015},
        {2.900000, 0.007336, 0.001420}, {3.700000, 0.000620, 0.000380}};
    return s;
  }();
  return f;
}

inline const FigureSpec& figure3() {
  static const FigureSpec f = [] {
    FigureSpec s;
    s.number = 3;
    s.hard = true;
    s.sweep = SweepVar::Delta;
    s.base = ModelParams::balanced(1.0, 1.0, 1.0);
    s.tau = std::numeric_limits<double>::quiet_NaN();
    s.rho = {
        {0.100000, 0.286106}, {0.200000, 0.367818}, {0.300000, 0.414463}, {0.400000, 0.445502}, {0.500000, 0.468072},
        {0.600000, 0.485498}, {0.700000, 0.499455}, {0.800000, 0.511007}, {0.900000, 0.520750}, {1.000000, 0.529173},
        {1.100000, 0.536536}, {1.200000, 0.543052}, {1.300000, 0.548844}, {1.400000, 0.554096}, {1.500000, 0.558866},
        {1.600000, 0.563228}, {1.700000, 0.567238}, {1.800000, 0.570940}, {1.900000, 0.574377}, {2.000000, 0.577580},
        {2.100000, 0.580575}, {2.200000, 0.583385}, {2.300000, 0.586029}, {2.400000, 0.588524}, {2.500000, 0.590884},
        {2.600000, 0.593122}, {2.700000, 0.595248}, {2.800000, 0.597271}, {2.900000, 0.599200}, {3.000000, 0.601043}};
    s.q0 = {
        {0.100000, 0.317814}, {0.200000, 0.455894}, {0.300000, 0.570062}, {0.400000, 0.674977}, {0.500000, 0.776231},
        {0.600000, 0.876761}, {0.700000, 0.978453}, {0.800000, 1.082711}, {0.900000, 1.190710}, {1.000000, 1.303535},
        {1.100000, 1.422261}, {1.200000, 1.548003}, {1.300000, 1.681977}, {1.400000, 1.825536}, {1.500000, 1.980226},
        {1.600000, 2.147846}, {1.700000, 2.330519}, {1.800000, 2.530784}, {1.900000, 2.751724}, {2.000000, 2.997120},
        {2.100000, 3.271683}, {2.200000, 3.581366}, {2.300000, 3.933803}, {2.400000, 4.338971}, {2.500000, 4.810150},
        {2.600000, 5.365445}, {2.700000, 6.030192}, {2.800000, 6.840974}, {2.900000, 7.852653}, {3.000000, 9.151430}};
    s.err = {
        {0.100000, 0.387398}, {0.200000, 0.356505}, {0.300000, 0.339267}, {0.400000, 0.327979}, {0.500000, 0.319866},
        {0.600000, 0.313662}, {0.700000, 0.308730}, {0.800000, 0.304673}, {0.900000, 0.301270}, {1.000000, 0.298343},
        {1.100000, 0.295794}, {1.200000, 0.293547}, {1.300000, 0.291556}, {1.400000, 0.289757}, {1.500000, 0.288126},
        {1.600000, 0.286640}, {1.700000, 0.285276}, {1.800000, 0.284020}, {1.900000, 0.282856}, {2.000000, 0.281774},
        {2.100000, 0.280764}, {2.200000, 0.279817}, {2.300000, 0.278928}, {2.400000, 0.278090}, {2.500000, 0.277299},
        {2.600000, 0.276550}, {2.700000, 0.275839}, {2.800000, 0.275163}, {2.900000, 0.274520}, {3.000000, 0.273906}};
    s.sim_cos = {
        {0.100000, 0.292169, 0.068311}, {0.500000, 0.471335, 0.046313}, {0.900000, 0.513079, 0.046942},
        {1.300000, 0.553376, 0.041451}, {1.700000, 0.569304, 0.037837}, {2.100000, 0.586522, 0.044094},
        {2.500000, 0.588257, 0.037694}, {2.900000, 0.599839, 0.040312}};
    s.sim_norm = {
        {0.100000, 0.319913, 0.015755}, {0.500000, 0.779787, 0.048421}, {0.900000, 1.200604, 0.100904},
        {1.300000, 1.675963, 0.155774}, {1.700000, 2.303410, 0.252017}, {2.100000, 3.368251, 0.608712},
        {2.500000, 5.055271, 1.811203}, {2.900000, 8.641536, 3.940439}};
    s.sim_err = {
        {0.100000, 0.388054, 0.027462}, {0.500000, 0.321232, 0.017746}, {0.900000, 0.305498, 0.017779},
        {1.300000, 0.290670, 0.015193}, {1.700000, 0.285058, 0.014186}, {2.100000, 0.279372, 0.016972},
        {2.500000, 0.278726, 0.014126}, {2.900000, 0.273488, 0.014389}};
    return s;
  }();
  return f;
}

inline const FigureSpec& figure4() {
  static const FigureSpec f = [] {
    FigureSpec s;
    s.number = 4;
    s.hard = false;
    s.sweep = SweepVar::Mu;
    s.base = ModelParams::balanced(1.1, 1.0, 2.0);
  // The published curve and markers for this sweep correspond to penalty 1.
    s.tau = 1.0;
    s.rho = {
        {0.100000, 0.135963}, {0.300000, 0.377844}, {0.500000, 0.555454}, {0.700000, 0.673082}, {0.900000, 0.748750},
        {1.100000, 0.797941}, {1.300000, 0.830743}, {1.500000, 0.853235}, {1.700000, 0.869068}, {1.900000, 0.880469},
        {2.100000, 0.888840}, {2.300000, 0.895096}, {2.500000, 0.899852}, {2.700000, 0.903539}, {2.900000, 0.906458},
        {3.100000, 0.908830}, {3.300000, 0.910819}, {3.500000, 0.912548}, {3.700000, 0.914110}, {3.900000, 0.915572},
        {4.100000, 0.916986}, {4.300000, 0.918392}, {4.500000, 0.919815}, {4.700000, 0.921273}, {4.900000, 0.922776}};
    s.q0 = {
        {0.100000, 0.540732}, {0.300000, 0.554618}, {0.500000, 0.574409}, {0.700000, 0.592032}, {0.900000, 0.603233},
        {1.100000, 0.606809}, {1.300000, 0.603152}, {1.500000, 0.593344}, {1.700000, 0.578678}, {1.900000, 0.560437},
        {2.100000, 0.539772}, {2.300000, 0.517652}, {2.500000, 0.494854}, {2.700000, 0.471972}, {2.900000, 0.449448},
        {3.100000, 0.427591}, {3.300000, 0.406606}, {3.500000, 0.386620}, {3.700000, 0.367696}, {3.900000, 0.349858},
        {4.100000, 0.333098}, {4.300000, 0.317387}, {4.500000, 0.302683}, {4.700000, 0.288936}, {4.900000, 0.276091}};
    s.err = {
        {0.100000, 0.494576}, {0.300000, 0.454875}, {0.500000, 0.390611}, {0.700000, 0.318764}, {0.900000, 0.250195},
        {1.100000, 0.190044}, {1.300000, 0.140079}, {1.500000, 0.100298}, {1.700000, 0.069782}, {1.900000, 0.047174},
        {2.100000, 0.030981}, {2.300000, 0.019761}, {2.500000, 0.012236}, {2.700000, 0.007353}, {2.900000, 0.004285},
        {3.100000, 0.002421}, {3.300000, 0.001325}, {3.500000, 0.000702}};
    s.sim_cos = {
        {0.100000, 0.127772, 0.064730}, {0.500000, 0.555762, 0.043863}, {0.900000, 0.747662, 0.023757},
        {1.300000, 0.830099, 0.020030}, {1.700000, 0.868012, 0.014900}, {2.100000, 0.889516, 0.009208},
        {2.500000, 0.899936, 0.008778}, {2.900000, 0.908229, 0.009037}, {3.300000, 0.909839, 0.008482},
        {3.700000, 0.914640, 0.008125}, {4.100000, 0.917212, 0.006883}, {4.500000, 0.919855, 0.007405},
        {4.900000, 0.922943, 0.008281}};
    s.sim_norm = {
        {0.100000, 0.542057, 0.015421}, {0.500000, 0.576317, 0.013595}, {0.900000, 0.604751, 0.011028},
        {1.300000, 0.601306, 0.010323}, {1.700000, 0.579985, 0.008994}, {2.100000, 0.539963, 0.008864},
        {2.500000, 0.494191, 0.009318}, {2.900000, 0.449139, 0.008544}, {3.300000, 0.406217, 0.007712},
        {3.700000, 0.366913, 0.007391}, {4.100000, 0.332364, 0.007014}, {4.500000, 0.302432, 0.005633},
        {4.900000, 0.275671, 0.005795}};
    s.sim_err = {
        {0.100000, 0.495752, 0.005544}, {0.500000, 0.391237, 0.009954}, {0.900000, 0.251228, 0.007699},
        {1.300000, 0.141395, 0.007083}, {1.700000, 0.070668, 0.004143}, {2.100000, 0.031154, 0.002209},
        {2.500000, 0.012306, 0.001323}, {2.900000, 0.004374, 0.000760}, {3.300000, 0.001353, 0.000412}};
    return s;
  }();
  return f;
}

inline const FigureSpec& figure5() {
  static const FigureSpec f = [] {
    FigureSpec s;
    s.number = 5;
    s.hard = false;
    s.sweep = SweepVar::Delta;
    s.base = ModelParams::balanced(1.0, 1.0, 2.0);
    s.tau = 2.0;
    s.rho = {
        {0.500000, 0.536832}, {1.000000, 0.645639}, {1.500000, 0.705460}, {2.000000, 0.745151}, {2.500000, 0.774032},
        {3.000000, 0.796261}, {3.500000, 0.814035}, {4.000000, 0.828648}, {4.500000, 0.840920}, {5.000000, 0.851391}};
    s.q0 = {
        {0.500000, 0.519515}, {1.000000, 0.648842}, {1.500000, 0.728905}, {2.000000, 0.786883}, {2.500000, 0.832170},
        {3.000000, 0.869184}, {3.500000, 0.900368}, {4.000000, 0.927221}, {4.500000, 0.950730}, {5.000000, 0.971587}};
    s.err = {
        {0.500000, 0.295692}, {1.000000, 0.259256}, {1.500000, 0.240262}, {2.000000, 0.228090}, {2.500000, 0.219456},
        {3.000000, 0.212940}, {3.500000, 0.207813}, {4.000000, 0.203652}, {4.500000, 0.200196}, {5.000000, 0.197276}};
    s.sim_cos = {
        {0.500000, 0.535724, 0.043998}, {1.000000, 0.645911, 0.034209}, {1.500000, 0.706376, 0.028138},
        {2.000000, 0.749615, 0.024462}, {2.500000, 0.774751, 0.023879}, {3.000000, 0.798500, 0.019165},
        {3.500000, 0.812315, 0.017253}, {4.000000, 0.829047, 0.014283}, {4.500000, 0.840631, 0.016247},
        {5.000000, 0.850802, 0.015865}};
    s.sim_norm = {
        {0.500000, 0.520970, 0.011723}, {1.000000, 0.647284, 0.013539}, {1.500000, 0.728338, 0.015010},
        {2.000000, 0.785275, 0.017545}, {2.500000, 0.833578, 0.016254}, {3.000000, 0.868152, 0.016594},
        {3.500000, 0.899201, 0.018513}, {4.000000, 0.926154, 0.019137}, {4.500000, 0.946909, 0.016327},
        {5.000000, 0.973289, 0.018476}};
    s.sim_err = {
        {0.500000, 0.296155, 0.015549}, {1.000000, 0.259971, 0.012631}, {1.500000, 0.240475, 0.009477},
        {2.000000, 0.227144, 0.007828}, {2.500000, 0.219108, 0.008964}, {3.000000, 0.212145, 0.006607},
        {3.500000, 0.208775, 0.006367}, {4.000000, 0.204582, 0.005460}, {4.500000, 0.200653, 0.006218},
        {5.000000, 0.197336, 0.006211}};
    return s;
  }();
  return f;
}

inline const FigureSpec& figure6() {
  static const FigureSpec f = [] {
    FigureSpec s;
    s.number = 6;
    s.hard = false;
    s.sweep = SweepVar::Tau;
    s.base = ModelParams::balanced(1.0, 1.0, 1.0);
    s.tau = 0.25;
    s.rho = {
        {0.062500, 0.707106}, {0.066986, 0.707106}, {0.071794, 0.707106}, {0.076947, 0.707106}, {0.082469, 0.707106},
        {0.088388, 0.707106}, {0.094732, 0.707106}, {0.101532, 0.707106}, {0.108819, 0.707106}, {0.116629, 0.707106},
        {0.125000, 0.707106}, {0.133972, 0.707106}, {0.143587, 0.707106}, {0.153893, 0.707106}, {0.164938, 0.707106},
        {0.176777, 0.707106}, {0.189465, 0.707106}, {0.203063, 0.707106}, {0.217638, 0.707106}, {0.233258, 0.707106},
        {0.250000, 0.707106}, {0.267943, 0.707105}, {0.287175, 0.707098}, {0.307786, 0.707078}, {0.329877, 0.707022},
        {0.353553, 0.706893}, {0.378929, 0.706640}, {0.406126, 0.706211}, {0.435275, 0.705562}, {0.466516, 0.704670},
        {0.500000, 0.703525}, {0.535887, 0.702132}, {0.574349, 0.700502}, {0.615572, 0.698650}, {0.659754, 0.696590},
        {0.707107, 0.694340}, {0.757858, 0.691916}, {0.812252, 0.689330}, {0.870551, 0.686596}, {0.933033, 0.683725},
        {1.000000, 0.680729}, {1.071773, 0.677617}, {1.148698, 0.674398}, {1.231144, 0.671080}, {1.319508, 0.667670},
        {1.414214, 0.664175}, {1.515717, 0.660602}, {1.624505, 0.656957}, {1.741101, 0.653244}, {1.866066, 0.649470},
        {2.000000, 0.645639}, {2.143547, 0.641757}, {2.297397, 0.637828}, {2.462289, 0.633856}, {2.639016, 0.629846},
        {2.828427, 0.625803}, {3.031433, 0.621730}, {3.249010, 0.617633}, {3.482202, 0.613514}, {3.732132, 0.609381},
        {4.000000, 0.605236}, {4.287094, 0.601085}, {8.574188, 0.560717}};
    s.q0 = {
        {0.062500, 0.044194}, {0.066986, 0.047366}, {0.071794, 0.050766}, {0.076947, 0.054409}, {0.082469, 0.058315},
        {0.088388, 0.062500}, {0.094732, 0.066986}, {0.101532, 0.071794}, {0.108819, 0.076947}, {0.116629, 0.082469},
        {0.125000, 0.088388}, {0.133972, 0.094732}, {0.143587, 0.101532}, {0.153893, 0.108819}, {0.164938, 0.116629},
        {0.176777, 0.125000}, {0.189465, 0.133972}, {0.203063, 0.143587}, {0.217638, 0.153893}, {0.233258, 0.164938},
        {0.250000, 0.176774}, {0.267943, 0.189452}, {0.287175, 0.203007}, {0.307786, 0.217443}, {0.329877, 0.232689},
        {0.353553, 0.248589}, {0.378929, 0.264909}, {0.406126, 0.281401}, {0.435275, 0.297858}, {0.466516, 0.314154},
        {0.500000, 0.330229}, {0.535887, 0.346077}, {0.574349, 0.361720}, {0.615572, 0.377195}, {0.659754, 0.392545},
        {0.707107, 0.407812}, {0.757858, 0.423039}, {0.812252, 0.438263}, {0.870551, 0.453520}, {0.933033, 0.468842},
        {1.000000, 0.484259}, {1.071773, 0.499798}, {1.148698, 0.515485}, {1.231144, 0.531344}, {1.319508, 0.547395},
        {1.414214, 0.563660}, {1.515717, 0.580159}, {1.624505, 0.596909}, {1.741101, 0.613929}, {1.866066, 0.631235},
        {2.000000, 0.648842}, {2.143547, 0.666766}, {2.297397, 0.685021}, {2.462289, 0.703618}, {2.639016, 0.722571},
        {2.828427, 0.741889}, {3.031433, 0.761581}, {3.249010, 0.781656}, {3.482202, 0.802117}, {3.732132, 0.822967},
        {4.000000, 0.844206}, {4.287094, 0.865830}, {8.574188, 1.097813}};
    s.err = {
        {0.062500, 0.239750}, {0.066986, 0.239750}, {0.071794, 0.239750}, {0.076947, 0.239750}, {0.082469, 0.239750},
        {0.088388, 0.239750}, {0.094732, 0.239750}, {0.101532, 0.239750}, {0.108819, 0.239750}, {0.116629, 0.239750},
        {0.125000, 0.239750}, {0.133972, 0.239750}, {0.143587, 0.239750}, {0.153893, 0.239750}, {0.164938, 0.239750},
        {0.176777, 0.239750}, {0.189465, 0.239750}, {0.203063, 0.239750}, {0.217638, 0.239750}, {0.233258, 0.239750},
        {0.250000, 0.239750}, {0.267943, 0.239751}, {0.287175, 0.239753}, {0.307786, 0.239759}, {0.329877, 0.239776},
        {0.353553, 0.239816}, {0.378929, 0.239895}, {0.406126, 0.240028}, {0.435275, 0.240230}, {0.466516, 0.240508},
        {0.500000, 0.240864}, {0.535887, 0.241299}, {0.574349, 0.241807}, {0.615572, 0.242386}, {0.659754, 0.243030},
        {0.707107, 0.243734}, {0.757858, 0.244495}, {0.812252, 0.245308}, {0.870551, 0.246169}, {0.933033, 0.247074},
        {1.000000, 0.248021}, {1.071773, 0.249007}, {1.148698, 0.250029}, {1.231144, 0.251085}, {1.319508, 0.252172},
        {1.414214, 0.253289}, {1.515717, 0.254434}, {1.624505, 0.255604}, {1.741101, 0.256800}, {1.866066, 0.258017},
        {2.000000, 0.259256}, {2.143547, 0.260515}, {2.297397, 0.261793}, {2.462289, 0.263087}, {2.639016, 0.264398},
        {2.828427, 0.265722}, {3.031433, 0.267060}, {3.249010, 0.268409}, {3.482202, 0.269768}, {3.732132, 0.271136},
        {4.000000, 0.272511}, {4.287094, 0.273892}, {8.574188, 0.287495}};
    s.sim_cos = {
        {0.062500, 0.706375, 0.030535}, {0.125000, 0.707649, 0.030839}, {0.250000, 0.706600, 0.030893},
        {0.500000, 0.704184, 0.030511}, {1.000000, 0.681354, 0.031926}, {2.000000, 0.645165, 0.034643},
        {4.000000, 0.604909, 0.037977}, {8.574188, 0.561436, 0.040773}};
    s.sim_norm = {
        {0.062500, 0.044106, 0.001887}, {0.125000, 0.088228, 0.003881}, {0.250000, 0.176745, 0.007533},
        {0.500000, 0.330313, 0.009509}, {1.000000, 0.484738, 0.010136}, {2.000000, 0.648612, 0.013585},
        {4.000000, 0.844087, 0.020165}, {8.574188, 1.094519, 0.035541}};
    s.sim_err = {
        {0.062500, 0.240654, 0.009597}, {0.125000, 0.240278, 0.009738}, {0.250000, 0.240804, 0.009863},
        {0.500000, 0.243471, 0.010400}, {1.000000, 0.248911, 0.010249}, {2.000000, 0.260199, 0.011373},
        {4.000000, 0.273318, 0.012690}, {8.574188, 0.287949, 0.014022}};
    return s;
  }();
  return f;
}

/// Figures 2 to 6. Figure 1 is the phase boundary.
inline const FigureSpec& figure(int n) {
  switch (n) {
    case 2: return figure2();
    case 3: return figure3();
    case 4: return figure4();
    case 5: return figure5();
    case 6: return figure6();
    default: throw Error(ErrorCode::InvalidArgument, "figure: expected 2..6");
  }
}

}  // namespace svmasym::figures
