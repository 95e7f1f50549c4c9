#include "rbwkb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace rbwkb {

namespace {

// 10-21 Gauss-Kronrod abscissae and weights (positive half, x[10] = 0).
const double XGK[11] = {
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};
const double WGK[11] = {
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};
const double WG[5] = {
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

struct Panel {
    double a, b;
    double value;
    double err;
};

Panel eval_panel(const std::function<double(double)>& f, double a, double b) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);
    const double dhlgth = std::fabs(hlgth);

    double fv1[10], fv2[10];
    const double fc = f(centr);
    double resg = 0.0;
    double resk = WGK[10] * fc;
    double resabs = std::fabs(resk);

    for (int j = 0; j < 5; ++j) {
        const int k = 2 * j + 1; // Gauss points sit at the odd Kronrod indices
        const double absc = hlgth * XGK[k];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[k] = f1;
        fv2[k] = f2;
        resg += WG[j] * (f1 + f2);
        resk += WGK[k] * (f1 + f2);
        resabs += WGK[k] * (std::fabs(f1) + std::fabs(f2));
    }
    for (int j = 0; j < 5; ++j) {
        const int k = 2 * j;
        const double absc = hlgth * XGK[k];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[k] = f1;
        fv2[k] = f2;
        resk += WGK[k] * (f1 + f2);
        resabs += WGK[k] * (std::fabs(f1) + std::fabs(f2));
    }

    const double reskh = 0.5 * resk;
    double resasc = WGK[10] * std::fabs(fc - reskh);
    for (int j = 0; j < 10; ++j)
        resasc += WGK[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    resabs *= dhlgth;
    resasc *= dhlgth;
    double abserr = std::fabs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::fmin(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    if (resabs > uflow / (50.0 * eps))
        abserr = std::fmax(50.0 * eps * resabs, abserr);

    return Panel{a, b, resk * hlgth, abserr};
}

} // namespace

QuadResult gk21(const std::function<double(double)>& f, double a, double b) {
    const Panel p = eval_panel(f, a, b);
    return QuadResult{p.value, p.err, 21, true};
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol, double rel_tol, int max_panels) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }

    std::vector<Panel> panels;
    panels.reserve(256);
    panels.push_back(eval_panel(f, a, b));
    out.evaluations = 21;

    auto totals = [&panels](double& v, double& e) {
        v = 0.0;
        e = 0.0;
        for (const Panel& p : panels) { v += p.value; e += p.err; }
    };

    double value, err;
    totals(value, err);
    while (err > std::fmax(abs_tol, rel_tol * std::fabs(value))
           && static_cast<int>(panels.size()) < max_panels) {
        size_t worst = 0;
        for (size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err) worst = i;
        const Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (mid <= p.a || mid >= p.b)
            break; // interval at floating-point resolution
        panels[worst] = eval_panel(f, p.a, mid);
        panels.push_back(eval_panel(f, mid, p.b));
        out.evaluations += 42;
        totals(value, err);
    }

    out.value = value;
    out.abs_err = err;
    out.converged = err <= std::fmax(abs_tol, rel_tol * std::fabs(value));
    return out;
}

} // namespace rbwkb
