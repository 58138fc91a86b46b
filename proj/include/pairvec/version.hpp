#pragma once

#define PAIRVEC_VERSION "0.1.0"
