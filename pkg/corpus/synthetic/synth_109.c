extern void print_int(int v);

int g0 = 4;
int g1 = 3;
int g2 = 7;
int a[8] = {7, 8, 0, 1, 3, 8, 7, 4};

void bump(int d)
{
    g0 = g0 + d;
}

int h0(int u, int v)
{
    int t;
    t = a[u & 7] * 6 / (1 + ((v - a[g2 & 7]) & 3));
    if (t > 19) {
        return t - a[g2 & 7];
    }
    return t + v;
}

int h1(int u, int v)
{
    int t;
    t = 2;
    if (t > 5) {
        return t - a[u & 7] * g2;
    }
    return t + v;
}

int h2(int u, int v)
{
    int t;
    t = a[u & 7];
    if (t > 14) {
        return t - 1 & a[g2 & 7];
    }
    return t + v;
}

int main(void)
{
    int x0, x1, x2, x3;
    int i0, i1, i2;
    x0 = 8;
    x1 = 9;
    x2 = 1;
    x3 = 0;
    x3 = (0 - a[x3 & 7] & (a[g2 & 7] < g2));
    if (x1 | a[x1 & 7] > 4) {
        print_int(8);
        x2++;
        bump(x0 | 0);
    }
    x3--;
    print_int(a[g1 & 7]);
    g2 = (g1 + x0 - x3);
    g2 = a[g0 & 7];
    x1++;
    g2 = (2 * g0);
    i0 = 0;
    while (i0 < 0) {
        x0 = h0(g2, 8 & g1);
        x1 = a[x2 & 7];
        g1 = 3;
        i0++;
    }
    i0 = 0;
    while (i0 < 0) {
        x1 = a[g1 & 7] - x1 % (1 + ((a[g1 & 7] % (1 + ((g0) & 3))) & 3));
        a[5 & 7] = 0 + g1;
        g1 = (9 | 0 ^ 2 & a[x1 & 7]);
        if (1 - 9 == 3) break;
        i0++;
    }
    for (i0 = 0; i0 < 0; i0++) {
        x3 = a[x1 & 7];
        if ((a[g1 & 7] < x2) == 0) continue;
        x2 = x1 / (1 + ((4 / (1 + ((0) & 3))) & 3));
        if (5 | 6 < 9) {
            if ((a[x3 & 7] < 5) == 2) break;
            x3++;
        }
    }
    i0 = 0;
    do {
        x2 = (g1 | a[g1 & 7] * a[x0 & 7] ^ 4);
        i0++;
    } while (i0 < 0);
    g1 = (g0 & g1 | a[g1 & 7]);
    i0 = 0;
    do {
        x0 = (g2 + a[x1 & 7] < g0 - g1);
        x3--;
        x0 = g2 % (1 + ((5) & 3)) % (1 + ((x1 - a[g0 & 7]) & 3));
        x2 = ((x1 < 6) ^ g2);
        x3 = a[g1 & 7];
        i0++;
    } while (i0 < 1);
    switch (a[x1 & 7] & x3 & 3) {
    case 0:
        x2 = g2;
        x0 = (x0 | x2 * a[x0 & 7] / (1 + ((7) & 3)));
    default:
        x1 = 8;
    }
    x2 = x3 % (1 + ((x0 * a[g1 & 7]) & 3));
    x1 = (x1 - g0 ^ x1);
    x0--;
    switch (x1 - x2 & 3) {
    case 0:
        a[0 & 7] = 1 & g1;
        break;
    case 1:
        g0 = (g1 / (1 + ((9) & 3)) & 8 + g1);
        break;
    default:
        bump((x1 < x2));
    }
    i0 = 0;
    while (i0 < 1) {
        g0 = (a[g1 & 7] * 4 ^ 3);
        i0++;
    }
    if (4 * 4 < 2) {
        x2--;
        a[x0 & 7] = 1 - a[x0 & 7];
        i0 = 0;
        do {
            g1 = a[x0 & 7];
            i0++;
        } while (i0 < 3);
    }
    x1 = a[x2 & 7] - a[x2 & 7] / (1 + ((2) & 3));
    i0 = 0;
    while (i0 < 1) {
        a[a[x2 & 7] & 7] = a[x2 & 7];
        x2++;
        i0++;
    }
    for (i0 = 0; i0 < 1; i0++) {
        if (a[x2 & 7] % (1 + ((a[g1 & 7]) & 3)) == 0) continue;
        x3 = (6 - a[g0 & 7] - x3 % (1 + ((a[x3 & 7]) & 3)));
        x3 = (g1 + g2);
    }
    x2 = (a[g0 & 7] | a[x1 & 7] ^ a[g2 & 7]);
    if ((6 == 9) == 8) {
        x0 = h0(8, 9);
        g1 = x2;
        print_int(4);
    }
    for (i0 = 0; i0 < 2; i0++) {
        g2 = a[x0 & 7];
        i1 = 0;
        while (i1 < 1) {
            print_int(a[g1 & 7] * 6);
            a[0 & 7] = g0;
            i1++;
        }
        if (9 ^ a[x0 & 7] == 1) break;
    }
    x2 = 7 / (1 + ((a[g1 & 7]) & 3));
    g1 = (7 | 2 * a[g2 & 7] * x3);
    x3 = x1;
    x1 = x0;
    x3 = (x0 - 2 ^ a[x0 & 7]);
    print_int(g1);
    x2--;
    g1 = x3;
    print_int(x1 * 9);
    i0 = 0;
    do {
        x2 = x3;
        if (2 % (1 + ((a[x2 & 7]) & 3)) == 0) break;
        i0++;
    } while (i0 < 2);
    for (i0 = 0; i0 < 3; i0++) {
        a[x3 & 7] = x0;
    }
    i0 = 0;
    while (i0 < 1) {
        a[a[x2 & 7] & 7] = 8;
        x1 = x1 * 7 % (1 + ((2 ^ x2) & 3));
        print_int(x1 / (1 + ((a[g2 & 7]) & 3)));
        if (9 == 1) break;
        i0++;
    }
    x3--;
    i0 = 0;
    while (i0 < 3) {
        x3--;
        x1 = h0(x1, a[g2 & 7]);
        x1 = ((9 < x1) + g0);
        x1--;
        x2 = x3 % (1 + ((a[g1 & 7] - a[g2 & 7]) & 3));
        x1 = h0(7 | g1, x2);
        i0++;
    }
    if (g2 == 9) {
        g2 = g1 | 2 % (1 + (((g0 < 7)) & 3));
    }
    g1 = (g2 / (1 + ((x3) & 3)) & a[g0 & 7] + a[g2 & 7]);
    if (g1 & x1 != 8) {
        i0 = 0;
        while (i0 < 1) {
            x1 = (a[x1 & 7] * g1 < (x1 < 9));
            for (i1 = 0; i1 < 3; i1++) {
                g0 = g2;
            }
            bump(x2 * g1);
            x1 = ((4 == 6) == a[x0 & 7] * x3);
            i0++;
        }
    } else {
        bump(x0 | a[x0 & 7]);
        a[x0 & 7] = g2 % (1 + ((x0) & 3));
        g2 = x3 % (1 + ((x2) & 3));
    }
    x1 = (8 / (1 + ((a[g0 & 7]) & 3)) * 0);
    x2 = a[g2 & 7];
    g0 = ((a[g0 & 7] < a[x3 & 7]) ^ x2 + a[x0 & 7]);
    i0 = 0;
    do {
        x3 = (g1 == a[x3 & 7]) % (1 + ((4 | x1) & 3));
        switch ((g2 < g0) & 3) {
        case 0:
            g2 = 5 % (1 + ((a[g0 & 7]) & 3));
            break;
        case 1:
            x2 = (g2 < 9);
        case 2:
            g1 = 0;
        default:
            x1++;
        }
        i0++;
    } while (i0 < 1);
    switch (0 & 3) {
    case 0:
        x0++;
        break;
    case 1:
        x3 = 5;
    default:
        x3 = (x1 + g0 ^ a[g1 & 7]);
    }
    switch (g1 & 3) {
    case 0:
        x2 = g2;
        break;
    default:
        print_int(x0 & 0);
    }
    x2 = (9 ^ x0 | a[x3 & 7] ^ 6);
    x0 = (x1 < 3);
    if (3 + 1 == 6) {
        i0 = 0;
        do {
            x3 = 0;
            i0++;
        } while (i0 < 0);
        x2 = a[g1 & 7];
        x2 = h1(g1 ^ g0, g1 % (1 + ((a[x2 & 7]) & 3)));
    } else {
        for (i0 = 0; i0 < 3; i0++) {
            a[g2 & 7] = a[g0 & 7] & x3;
            print_int(6 ^ g1);
        }
    }
    if (x0 + x0 < 1) {
        if (x0 | x3 == 4)
            x1 = (x0 & 3 < x1 / (1 + ((x2) & 3)));
        x2 = x2;
        g2 = a[g2 & 7];
    }
    for (i0 = 0; i0 < 3; i0++) {
        g0 = g1;
    }
    x2++;
    x3 = (1 + (6 == 1));
    for (i0 = 0; i0 < 2; i0++) {
        x2 = (x0 * a[x2 & 7] ^ 3 ^ x2);
        a[a[x0 & 7] & 7] = (x0 < a[g2 & 7]);
        a[x3 & 7] = (x0 == g2);
    }
    x2++;
    x3 = h2(a[x2 & 7], x2 * a[x2 & 7]);
    g1 = (a[g0 & 7] | 6 + x1 & 3);
    bump(a[x1 & 7] % (1 + ((a[x3 & 7]) & 3)));
    g0 = (3 - 2 / (1 + ((x1) & 3)));
    print_int(6);
    g0 = 6;
    i0 = 0;
    do {
        for (i1 = 0; i1 < 0; i1++) {
            g1 = (a[x1 & 7] & 2 ^ x3 / (1 + ((g2) & 3)));
            bump(a[g0 & 7]);
            x3 = (9 & g1);
        }
        i0++;
    } while (i0 < 2);
    x2 = ((x0 == g2) < a[x3 & 7] ^ 4);
    switch (x1 / (1 + ((9) & 3)) & 3) {
    case 0:
        a[x2 & 7] = x1 ^ g2;
        break;
    case 1:
        x2 = x3 | 0 % (1 + ((6 + 9) & 3));
    case 2:
        x3 = g1;
        break;
    default:
        g2 = x1;
    }
    print_int(g2);
    x0 = (4 / (1 + ((x3) & 3)) * a[x3 & 7] + 2);
    a[1 & 7] = a[x0 & 7] + 3;
    switch ((g0 < g0) & 3) {
    case 0:
        i0 = 0;
        while (i0 < 1) {
            x3--;
            i0++;
        }
        break;
    default:
        g1 = (x1 + a[x2 & 7] ^ 8);
    }
    print_int(0);
    for (i0 = 0; i0 < 1; i0++) {
        a[2 & 7] = g0 ^ 5;
    }
    i0 = 0;
    do {
        x0 = (9 / (1 + ((x2) & 3)) * x2);
        i0++;
    } while (i0 < 1);
    for (i0 = 0; i0 < 0; i0++) {
        switch (9 | g0 & 3) {
        case 0:
            g0 = 3;
            break;
        case 1:
            g1 = (3 < x3);
            break;
        case 2:
            x1 = (g2 == 4);
            break;
        default:
            x2--;
        }
    }
    if ((a[x2 & 7] < a[g2 & 7]) > 2) {
        x2 = a[g0 & 7] - x1 / (1 + ((g2) & 3));
        x3 = h0(4 ^ a[x1 & 7], g2);
        x3 = g2;
    }
    if (6 ^ g0 != 4) {
        print_int(g0 & a[g2 & 7]);
        print_int(x1 + x3);
        a[g2 & 7] = a[g1 & 7];
        g2 = (5 + x3 ^ 6 ^ x2);
    } else {
        i0 = 0;
        while (i0 < 3) {
            a[8 & 7] = x3;
            i0++;
        }
    }
    g0 = (g1 < 1);
    g0 = (x1 - 4);
    x3 = a[g0 & 7];
    x3 = (x3 % (1 + ((a[g0 & 7]) & 3)) | 3);
    if (x0 + g1 == 2) {
        print_int(2 + x1);
        if (g2 % (1 + ((2) & 3)) != 7) {
            x1 = g1;
        }
        a[a[x3 & 7] & 7] = g2 & g2;
    } else {
        x1 = g2;
        g1 = x2 & x3 / (1 + ((x3 / (1 + ((g0) & 3))) & 3));
        g1 = g0;
    }
    i0 = 0;
    while (i0 < 1) {
        i1 = 0;
        while (i1 < 3) {
            bump(g1);
            i1++;
        }
        x3++;
        if (a[x3 & 7] * x3 == 0) break;
        i0++;
    }
    i0 = 0;
    do {
        i1 = 0;
        do {
            g2 = a[x0 & 7];
            print_int(a[x0 & 7] | 9);
            i1++;
        } while (i1 < 3);
        x3 = (a[g0 & 7] == x2 % (1 + ((x0) & 3)));
        x3 = 7;
        i0++;
    } while (i0 < 1);
    switch ((4 < 0) & 3) {
    case 0:
        a[g0 & 7] = (1 < a[g1 & 7]);
        x3++;
        break;
    default:
        x0 = a[x2 & 7];
    }
    g2 = a[x1 & 7];
    i0 = 0;
    do {
        i1 = 0;
        do {
            if (x3 == 3) break;
            i1++;
        } while (i1 < 0);
        x2++;
        i0++;
    } while (i0 < 1);
    print_int((9 < x3));
    if (2 > 9) {
        x2--;
        g2 = (a[x2 & 7] - x0 | 5);
        x0 = ((a[g2 & 7] < a[x1 & 7]) ^ a[x2 & 7]);
        print_int(a[x1 & 7]);
    } else {
        g0 = (3 * a[x3 & 7] - a[g2 & 7]);
        g2 = (a[g0 & 7] - 7 - 1);
        g1 = a[x0 & 7];
    }
    x1 = (a[g2 & 7] & a[x0 & 7] % (1 + ((g2) & 3)));
    i0 = 0;
    do {
        if (g0 / (1 + ((0) & 3)) != 5) {
            if (a[x3 & 7] | x0 == 1) break;
        }
        x0 = (a[g2 & 7] % (1 + ((a[x1 & 7]) & 3)) + a[g0 & 7] & x3);
        a[g2 & 7] = 0 ^ g2;
        g2 = ((x2 == a[g1 & 7]) & 0 + a[x2 & 7]);
        i0++;
    } while (i0 < 3);
    bump(x1);
    a[a[g0 & 7] & 7] = a[x1 & 7];
    x1++;
    if (6 | x2 < 6) {
        a[g0 & 7] = g0 % (1 + ((x1) & 3));
        x0 = (x0 < g2) / (1 + (((x0 == x1)) & 3));
        g0 = 2;
        x3 = 7;
        x3--;
    }
    a[9 & 7] = (4 == 9);
    a[4 & 7] = 4 - 6;
    x3 = (a[x0 & 7] / (1 + ((4) & 3)) - x3 - a[x3 & 7]);
    x0--;
    if (x0 < 8) {
        if (g1 / (1 + ((5) & 3)) < 4) {
            g0 = 5;
        }
        x2 = a[g1 & 7];
        x2 = (a[x1 & 7] * x3 == a[g1 & 7]);
        g0 = (9 + x0 ^ a[g0 & 7]);
    }
    switch (x1 + a[x1 & 7] & 3) {
    case 0:
        x1 = a[g0 & 7];
        x3 = h0(a[x1 & 7], 8 * 9);
        g2 = (x2 - a[x0 & 7] + 0 - 3);
        break;
    case 1:
        bump(x1 | g2);
        break;
    default:
        x0 = x1;
    }
    for (i0 = 0; i0 < 2; i0++) {
        if (a[g0 & 7] & g0 == 2) break;
        i1 = 0;
        do {
            x1 = a[x0 & 7];
            x3 = 5;
            i1++;
        } while (i1 < 3);
    }
    x0 = (a[g2 & 7] + x2 & (a[x3 & 7] == g2));
    switch (a[x0 & 7] & 3) {
    case 0:
        bump(x1);
        g0 = (4 ^ 8);
        break;
    default:
        x2 = (g2 * a[x1 & 7] / (1 + ((x0) & 3)));
    }
    bump(1 / (1 + ((g2) & 3)));
    if (1 | 2 > 7) {
        x0 = ((8 == g0) + g0 ^ a[x2 & 7]);
        g0 = g1;
    } else {
        x3 = (a[g0 & 7] == a[x2 & 7] | x0);
        g0 = (a[x0 & 7] & x0 * x0 % (1 + ((9) & 3)));
        x3--;
        g0 = x1;
    }
    g1 = a[x0 & 7];
    for (i0 = 0; i0 < 2; i0++) {
        if ((3 < 1) == 7)
            bump(g2 % (1 + ((x0) & 3)));
        if ((3 < x0) == 0) continue;
    }
    a[1 & 7] = 5;
    for (i0 = 0; i0 < 1; i0++) {
        x3 = 2;
        a[a[g2 & 7] & 7] = g2 | a[x1 & 7];
    }
    g2 = (a[g0 & 7] & x0);
    g0 = 9;
    g2 = x1 / (1 + ((x0) & 3));
    g0 = (6 - 2);
    bump(a[x0 & 7] / (1 + ((g2) & 3)));
    x2 = 8;
    x0 = h1(a[x0 & 7], 2);
    print_int(a[x1 & 7] - g2);
    if (3 * x0 < 7) {
        a[6 & 7] = x3 | a[x0 & 7];
        x1 = (g0 + 3 & a[g0 & 7]);
    }
    x3 = a[x2 & 7];
    for (i0 = 0; i0 < 2; i0++) {
        if (9 > 4) {
            x0 = a[g1 & 7];
        } else {
            g0 = (g0 ^ x1 - (a[x1 & 7] < 5));
            g2 = (a[x3 & 7] ^ a[x1 & 7] & a[x0 & 7]);
            x2 = (x3 / (1 + ((g0) & 3)) * x0 + x3);
        }
    }
    x1 = (x3 + x0 < (a[x0 & 7] == a[x3 & 7]));
    i0 = 0;
    while (i0 < 1) {
        for (i1 = 0; i1 < 3; i1++) {
            i2 = 0;
            while (i2 < 3) {
                x0 = (7 | x0 ^ 3);
                x2 = x3 - 1 % (1 + ((a[x1 & 7]) & 3));
                i2++;
            }
        }
        i0++;
    }
    g1 = (g0 * x2);
    bump(x1);
    g2 = (8 % (1 + ((g0) & 3)) - 5);
    i0 = 0;
    while (i0 < 0) {
        x2 = (4 + a[g1 & 7] | g2 - 1);
        if (0 ^ x2 != 7) {
            g2 = (g2 & g0 % (1 + ((a[g1 & 7]) & 3)));
            x3 = g0;
        }
        i0++;
    }
    i0 = 0;
    while (i0 < 1) {
        print_int(x3);
        bump(7 & a[g1 & 7]);
        if (x2 == 0) break;
        i0++;
    }
    print_int(5);
    i0 = 0;
    do {
        a[a[g1 & 7] & 7] = a[x1 & 7] * 7;
        if (a[g1 & 7] ^ x2 == 3) break;
        x2++;
        print_int(a[x2 & 7] ^ x3);
        i0++;
    } while (i0 < 1);
    print_int(7);
    switch (a[g0 & 7] & 3) {
    case 0:
        i0 = 0;
        do {
            print_int(x0);
            i0++;
        } while (i0 < 1);
        break;
    default:
        a[9 & 7] = x0 | 8;
    }
    x2 = (7 + g1 == 4 + a[g2 & 7]);
    if (a[g0 & 7] - g0 < 3) {
        g0 = (g2 | x0 % (1 + ((a[g0 & 7]) & 3)));
        print_int(5 + a[g2 & 7]);
        switch (8 % (1 + ((a[x3 & 7]) & 3)) & 3) {
        case 0:
            x2 = 1 + 5 % (1 + ((x1) & 3));
        default:
            x0 = (a[x2 & 7] | a[g2 & 7] + 3);
        }
    }
    if (x3 & 7 == 8) {
        if (7 ^ g2 < 9) {
            x1 = 8 ^ 9 / (1 + ((2) & 3));
            print_int(x3 - 2);
        }
    } else {
        x1 = (a[g1 & 7] == a[x3 & 7] - 6);
        x1 = ((3 < a[g0 & 7]) | x2);
        print_int(7 & a[x3 & 7]);
    }
    x2++;
    x2 = (9 | 8 | 1);
    x3 = 3 % (1 + ((a[x0 & 7]) & 3)) % (1 + ((5) & 3));
    if (5 * a[x1 & 7] != 4) {
        x1 = (a[x2 & 7] < g1 | 2);
    }
    g0 = (a[g0 & 7] | (a[x1 & 7] == 2));
    i0 = 0;
    do {
        x1 = h2(g1 | g2, x1 % (1 + ((g1) & 3)));
        a[a[x0 & 7] & 7] = g1 ^ 9;
        x1 = g2 / (1 + (((a[x2 & 7] == 1)) & 3));
        a[g1 & 7] = (a[g1 & 7] < a[g2 & 7]);
        g2 = (x0 - 1 ^ x1);
        i0++;
    } while (i0 < 1);
    switch (a[x0 & 7] * 9 & 3) {
    case 0:
        a[a[g2 & 7] & 7] = (2 == g1);
        break;
    default:
        g1 = (3 * g0 & 5 % (1 + ((a[x0 & 7]) & 3)));
    }
    x3--;
    for (i0 = 0; i0 < 3; i0++) {
        print_int(8 - a[x3 & 7]);
        x1 = (x0 % (1 + ((x3) & 3)) < g0);
        switch (x2 & 3) {
        case 0:
            x2--;
        case 1:
            x1++;
        default:
            a[5 & 7] = (g2 < a[x1 & 7]);
        }
    }
    x1 = g2;
    if (g2 / (1 + ((x2) & 3)) == 6) {
        g1 = (a[x0 & 7] - x3 | x0);
        x1 = x2 - 5 / (1 + ((x1) & 3));
    } else {
        g2 = 0;
        g0 = g1;
    }
    g1 = ((x2 < x3) ^ (g0 == x1));
    g1 = x3;
    i0 = 0;
    while (i0 < 2) {
        if (a[x1 & 7] / (1 + ((x3) & 3)) < 8) {
            x1 = g2;
            a[2 & 7] = a[x2 & 7] & 3;
        }
        x2++;
        i0++;
    }
    print_int((a[g1 & 7] < x2));
    a[6 & 7] = 5 & 1;
    if (g0 < 3) {
        x1 = (g2 / (1 + ((5) & 3)) & 8 | 7);
        g0 = 6 * x2 % (1 + ((x3 ^ 6) & 3));
    } else {
        g1 = (x3 & x3 * x2);
        print_int(a[g1 & 7] ^ 1);
    }
    x3 = (7 ^ 3 ^ a[x2 & 7] - x0);
    x2--;
    g0 = 1;
    if (a[x0 & 7] % (1 + ((8) & 3)) != 7) {
        i0 = 0;
        while (i0 < 0) {
            a[g0 & 7] = 5;
            i0++;
        }
    }
    x2--;
    if ((x1 < 1) != 2) {
        x0 = (8 - g1 | x1);
        x2--;
        i0 = 0;
        do {
            x2 = x2;
            i0++;
        } while (i0 < 2);
    }
    i0 = 0;
    do {
        for (i1 = 0; i1 < 2; i1++) {
            g0 = x2 / (1 + ((9 | 8) & 3));
            g2 = x1 / (1 + ((5) & 3));
            print_int(x2);
        }
        i0++;
    } while (i0 < 2);
    i0 = 0;
    do {
        a[x2 & 7] = g1 ^ x3;
        if ((2 == g0) > 7) {
            a[x2 & 7] = 4;
        }
        g2 = (x1 & 3 ^ 2);
        if (x3 | a[g2 & 7] == 0) break;
        if (x3 | g0 == 1) break;
        i0++;
    } while (i0 < 1);
    x1 = g0;
    i0 = 0;
    do {
        x3 = x1;
        x0 = ((2 < x1) - a[x3 & 7] / (1 + ((g1) & 3)));
        g1 = a[g2 & 7];
        i0++;
    } while (i0 < 0);
    if (9 | a[x1 & 7] > 2) {
        x2 = (g0 * 8 * a[x2 & 7] - x2);
        a[g1 & 7] = 0 | 8;
    } else {
        g1 = 0;
        x0 = (x1 ^ g2 & g2);
        bump(a[x3 & 7] % (1 + ((g2) & 3)));
    }
    g2 = (x2 < a[x0 & 7] + 6);
    switch (0 & 3) {
    case 0:
        x0 = g2;
    case 1:
        x2 = (5 == g1 | a[g1 & 7]);
        break;
    case 2:
        print_int(a[g0 & 7]);
        break;
    default:
        g1 = (7 % (1 + ((x2) & 3)) | x2 / (1 + ((x0) & 3)));
    }
    if ((x0 == a[g2 & 7]) != 1) {
        bump(7);
        g0 = (x2 & a[x2 & 7]);
    }
    x3 = h0((x0 == g2), g2);
    print_int(a[x2 & 7] + 2);
    if ((6 < 5) != 5) {
        if (g2 != 4)
            g2 = (g1 & x3);
        a[x1 & 7] = (a[x2 & 7] < 7);
    }
    i0 = 0;
    while (i0 < 2) {
        x3++;
        switch (a[g0 & 7] & 3) {
        case 0:
            g2 = (a[x2 & 7] + a[g2 & 7] + 1);
            break;
        case 1:
            x3 = x2;
            break;
        default:
            x2 = (2 / (1 + ((a[x3 & 7]) & 3)) < 5);
        }
        i0++;
    }
    x2 = x0;
    return (x0 + x1) & 255;
}
