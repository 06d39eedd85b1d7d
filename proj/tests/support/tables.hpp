#pragma once

#include <Eigen/Core>

namespace tables {

// Reference arbitrage-free rates for the seven-currency market (row: 1 unit of
// USD, EUR, CNY, HKD, GBP, JPY, AUD).
inline Eigen::MatrixXd corrected_market() {
  Eigen::MatrixXd r(7, 7);
  r << 1, 0.8422, 6.3738, 7.7665, 0.7208, 110.0171, 1.3385,
      1.1874, 1, 7.5680, 9.2216, 0.8559, 130.6292, 1.5893,
      0.1569, 0.1321, 1, 1.2185, 0.1131, 17.2608, 0.2100,
      0.1288, 0.1084, 0.8207, 1, 0.0928, 14.1656, 0.1723,
      1.3873, 1.1684, 8.8425, 10.7746, 1, 152.6286, 1.8557,
      0.0091, 0.0077, 0.0579, 0.0706, 0.0066, 1, 0.0122,
      0.7471, 0.6292, 4.7618, 5.8022, 0.5385, 82.1919, 1;
  return r;
}

}  // namespace tables
