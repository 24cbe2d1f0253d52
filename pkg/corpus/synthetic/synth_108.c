extern void print_int(int v);

int g0 = 2;
int g1 = 1;
int g2 = 6;
int a[8] = {4, 6, 3, 1, 4, 3, 2, 3};

void bump(int d)
{
    g0 = g0 + d;
}

int h0(int u, int v)
{
    int t;
    t = g0 % (1 + ((a[g0 & 7] & 6) & 3));
    if (t > 11) {
        return t - v + a[u & 7];
    }
    return t + v;
}

int h1(int u, int v)
{
    int t;
    t = (3 & a[u & 7]);
    if (t > 12) {
        return t - a[u & 7] - a[v & 7];
    }
    return t + v;
}

int h2(int u, int v)
{
    int t;
    t = u;
    if (t > 5) {
        return t - g1 / (1 + ((g2) & 3));
    }
    return t + v;
}

int main(void)
{
    int x0, x1, x2, x3;
    int i0, i1, i2;
    x0 = 0;
    x1 = 3;
    x2 = 9;
    x3 = 7;
    i0 = 0;
    do {
        g0 = (a[x1 & 7] * x2 ^ g2);
        i1 = 0;
        while (i1 < 3) {
            x2--;
            i1++;
        }
        i0++;
    } while (i0 < 1);
    for (i0 = 0; i0 < 3; i0++) {
        x2 = (2 * 9);
        i1 = 0;
        while (i1 < 0) {
            a[g2 & 7] = a[x0 & 7] & 8;
            i1++;
        }
        g1 = (8 < (a[g2 & 7] < x3));
    }
    x2++;
    i0 = 0;
    while (i0 < 1) {
        i1 = 0;
        do {
            g1 = (1 & x3 < g0 - 8);
            i1++;
        } while (i1 < 3);
        if (a[g2 & 7] * 1 == 0) break;
        x0++;
        i0++;
    }
    bump(g1 + x0);
    if (g2 % (1 + ((a[g1 & 7]) & 3)) != 5) {
        i0 = 0;
        while (i0 < 0) {
            if (g1 == 2) break;
            print_int(a[g2 & 7]);
            i0++;
        }
    } else {
        g0 = g1;
    }
    switch (x3 / (1 + ((g2) & 3)) & 3) {
    case 0:
        x2 = h1(a[g2 & 7], a[x2 & 7]);
    case 1:
        x2 = g1 - a[x2 & 7] % (1 + (((0 < g2)) & 3));
    default:
        a[x1 & 7] = (x3 < 8);
    }
    for (i0 = 0; i0 < 3; i0++) {
        x3 = a[x3 & 7];
    }
    if (x2 == 7) {
        a[7 & 7] = a[x0 & 7] % (1 + ((8) & 3));
        i0 = 0;
        while (i0 < 0) {
            bump(a[x3 & 7] * x0);
            x3--;
            i0++;
        }
        g2 = 3;
    } else {
        a[a[x3 & 7] & 7] = a[g2 & 7] + a[x0 & 7];
    }
    i0 = 0;
    do {
        x0 = g0;
        g1 = 2;
        if (g1 ^ g1 == 1) break;
        a[a[x0 & 7] & 7] = 5;
        i0++;
    } while (i0 < 2);
    g0 = g0 % (1 + ((a[x0 & 7] - 7) & 3));
    switch (a[x1 & 7] / (1 + ((x1) & 3)) & 3) {
    case 0:
        print_int(x3);
        break;
    case 1:
        g0 = (1 - 7 & x3);
    case 2:
        x2 = a[x2 & 7];
        break;
    default:
        x0 = (a[g0 & 7] ^ a[x0 & 7] - x3 | x1);
    }
    g1 = ((a[g2 & 7] == x3) & 0 | a[x2 & 7]);
    x2 = a[x2 & 7];
    a[a[g2 & 7] & 7] = a[g0 & 7];
    switch (8 * 9 & 3) {
    case 0:
        x2++;
        break;
    default:
        bump(x1 | g2);
    }
    x3++;
    g0 = (9 * x0 & 8);
    if (x2 > 0)
        x3 = (a[x2 & 7] / (1 + ((a[x0 & 7]) & 3)) | g2 % (1 + ((a[x3 & 7]) & 3)));
    g2 = (x2 - a[x3 & 7]);
    i0 = 0;
    while (i0 < 3) {
        g1 = (a[g1 & 7] ^ a[x0 & 7]);
        i0++;
    }
    x2 = h1((a[x1 & 7] == a[x3 & 7]), g0);
    bump(x2);
    x3++;
    if (2 | a[x0 & 7] < 1) {
        x0--;
        g1 = x1 & g1 % (1 + (((g1 < a[x1 & 7])) & 3));
        if (a[g1 & 7] | g0 == 8) {
            print_int(g0);
            g2 = a[x0 & 7];
        }
    }
    if (a[x2 & 7] < 1) {
        g0 = (a[x3 & 7] + x0 / (1 + ((g1) & 3)));
    } else {
        if (4 % (1 + ((g2) & 3)) == 2) {
            print_int(a[x1 & 7]);
            x2 = 0;
        }
    }
    if (7 / (1 + ((a[x0 & 7]) & 3)) != 5) {
        i0 = 0;
        do {
            if (3 == 2) break;
            i0++;
        } while (i0 < 3);
        g2 = 2;
        g0 = a[x2 & 7] - 3 % (1 + ((g1) & 3));
    } else {
        a[g2 & 7] = a[x3 & 7] % (1 + ((g0) & 3));
        print_int(a[g1 & 7] + x3);
    }
    x3 = (g1 & 9 ^ 6);
    x3 = a[g1 & 7] % (1 + ((5 - 1) & 3));
    g2 = ((x0 == g1) - a[x2 & 7]);
    g1 = (a[x2 & 7] + x3 < (2 < 9));
    x1 = (7 * a[x0 & 7] < a[g2 & 7]);
    g0 = (a[x0 & 7] == x3 + a[x1 & 7]);
    g2 = g1 / (1 + ((a[x1 & 7] * 0) & 3));
    for (i0 = 0; i0 < 1; i0++) {
        x0 = h0(a[x1 & 7] - a[x1 & 7], 3);
    }
    for (i0 = 0; i0 < 3; i0++) {
        x3 = (9 % (1 + ((g1) & 3)) * (a[g2 & 7] == g1));
        x0 = (6 < (8 < x1));
        i1 = 0;
        while (i1 < 2) {
            print_int(x3 % (1 + ((4) & 3)));
            bump((x2 == a[g2 & 7]));
            i1++;
        }
    }
    i0 = 0;
    do {
        x1 = ((a[x0 & 7] == g0) + a[x3 & 7] - x0);
        a[3 & 7] = x3;
        i0++;
    } while (i0 < 0);
    x1 = g1;
    if (9 % (1 + ((x1) & 3)) == 7) {
        if (x2 ^ x3 > 7) {
            x2 = (g1 - 9 + 5);
            g0 = 5;
        }
    }
    switch (x1 | g1 & 3) {
    case 0:
        x0 = (g2 + 8 == g0);
        bump(g2);
        break;
    case 1:
        x3 = (a[g0 & 7] == 3) % (1 + ((g1 % (1 + ((8) & 3))) & 3));
        break;
    case 2:
        x3 = h2(x1 % (1 + ((5) & 3)), (a[g0 & 7] == g1));
    default:
        x1 = (5 / (1 + ((8) & 3)) ^ 9 - 2);
    }
    i0 = 0;
    do {
        i1 = 0;
        while (i1 < 1) {
            x1 = g1;
            i1++;
        }
        a[x1 & 7] = a[x1 & 7] + 3;
        x0++;
        i0++;
    } while (i0 < 3);
    i0 = 0;
    while (i0 < 1) {
        a[x2 & 7] = 3;
        g1 = a[g0 & 7];
        x3 = a[x3 & 7];
        bump(7);
        i0++;
    }
    for (i0 = 0; i0 < 2; i0++) {
        if ((5 == g2) > 1) {
            if ((5 < 7) == 3) continue;
            bump(x1 - 2);
        }
        x3 = (1 ^ 2 + 2);
        if (g1 - g0 == 1) break;
        x3 = h0(a[x1 & 7], g0 + x2);
    }
    print_int(g2 * g2);
    a[x0 & 7] = a[x3 & 7];
    if (g2 | 6 > 0) {
        if (a[g0 & 7] < 3) {
            bump(a[g2 & 7] % (1 + ((x2) & 3)));
            x1 = h0(g1 & g2, a[x3 & 7] & a[x3 & 7]);
        }
        x2 = g2;
        x1 = a[x2 & 7];
    }
    if (g2 - 4 > 5) {
        switch (6 % (1 + ((7) & 3)) & 3) {
        case 0:
            print_int(x2 % (1 + ((g0) & 3)));
        case 1:
            x3--;
            break;
        case 2:
            x2 = (a[x0 & 7] ^ (x2 < x1));
            break;
        default:
            x1 = x2;
        }
    } else {
        bump(4);
    }
    g0 = (x0 == x2);
    if (x1 != 2) {
        if (8 == 5) {
            x0 = (g1 % (1 + ((1) & 3)) + x0);
            x0--;
            x2--;
        } else {
            g0 = ((x3 == x3) == x3 + g1);
        }
    } else {
        if (7 < 2)
            x3 = h0(a[g1 & 7] & x2, g2 + 7);
        x3 = x1;
    }
    x3 = g0;
    g2 = (7 * (a[x1 & 7] == a[x0 & 7]));
    print_int(g1 + a[g1 & 7]);
    x2++;
    i0 = 0;
    while (i0 < 0) {
        switch (5 ^ 7 & 3) {
        case 0:
            print_int(x0 ^ x2);
            bump(a[x3 & 7] ^ g2);
            break;
        default:
            bump(4 | a[x2 & 7]);
        }
        if (9 == 0) break;
        i0++;
    }
    x3--;
    print_int(a[x3 & 7] / (1 + ((g0) & 3)));
    g2 = 7;
    a[x2 & 7] = x3;
    i0 = 0;
    do {
        i1 = 0;
        do {
            a[x2 & 7] = a[x3 & 7];
            i1++;
        } while (i1 < 3);
        print_int(x1);
        x1 = a[x1 & 7];
        i0++;
    } while (i0 < 3);
    switch (a[x0 & 7] - a[g1 & 7] & 3) {
    case 0:
        x0 = x1 / (1 + ((x0) & 3)) / (1 + ((9) & 3));
        print_int(8);
    case 1:
        x0 = (g1 < g2) / (1 + ((x1 | g1) & 3));
        break;
    case 2:
        x1 = (g0 & a[x3 & 7] | a[g2 & 7]);
        break;
    default:
        x1 = a[g0 & 7];
    }
    if (a[g0 & 7] + 8 < 9) {
        x1 = 7;
    }
    x0 = ((1 < a[x3 & 7]) ^ 5 / (1 + ((x2) & 3)));
    for (i0 = 0; i0 < 2; i0++) {
        print_int(x2 | x3);
    }
    i0 = 0;
    while (i0 < 2) {
        i1 = 0;
        do {
            i2 = 0;
            do {
                x2 = (a[x2 & 7] == 6);
                i2++;
            } while (i2 < 0);
            i1++;
        } while (i1 < 0);
        i0++;
    }
    g2 = ((2 == x0) < 1 * 3);
    a[x0 & 7] = a[x0 & 7] / (1 + ((g2) & 3));
    x0 = (1 * 1);
    x0--;
    if (a[g1 & 7] / (1 + ((0) & 3)) != 2) {
        g2 = (x3 & a[x1 & 7] ^ x2 % (1 + ((5) & 3)));
        i0 = 0;
        while (i0 < 2) {
            g1 = (a[x2 & 7] == (5 == a[x0 & 7]));
            bump(x0 ^ 8);
            i0++;
        }
    }
    x2 = x1;
    print_int(x0);
    i0 = 0;
    do {
        x0 = 3;
        if (7 + x0 == 9) {
            if (g1 % (1 + ((a[x1 & 7]) & 3)) < 8) {
                a[2 & 7] = 6;
            }
            x3 = (g2 + 0 * (7 < 5));
        }
        i0++;
    } while (i0 < 3);
    if ((g0 == g2) != 0) {
        x3++;
        g2 = (3 ^ a[g1 & 7]);
        if (3 * 5 > 1) {
            print_int(4 + 7);
            x0 = h2(4, 2);
            g0 = g0;
        }
    }
    if (x0 < 3) {
        a[8 & 7] = x3 % (1 + ((x3) & 3));
        if (g2 + a[x1 & 7] > 2) {
            if (1 ^ g2 > 1) {
                x2 = ((x2 < a[g2 & 7]) + a[g1 & 7] * g0);
                x2 = (x2 ^ 3 ^ (g1 < a[g1 & 7]));
            }
        }
    } else {
        g1 = a[g1 & 7];
        x2 = (g0 % (1 + ((7) & 3)) * g2 + x1);
    }
    switch (a[g1 & 7] / (1 + ((2) & 3)) & 3) {
    case 0:
        g2 = x3;
    case 1:
        g0 = (g2 + a[g1 & 7] + 1);
        break;
    default:
        print_int(x3 / (1 + ((x1) & 3)));
    }
    x2 = g1 / (1 + ((g1 | 2) & 3));
    i0 = 0;
    do {
        g1 = (g1 & x0 ^ a[x1 & 7]);
        i0++;
    } while (i0 < 3);
    x1 = a[x1 & 7];
    if (g1 != 0) {
        x0++;
        print_int(5 % (1 + ((2) & 3)));
        x0 = ((g2 == g0) + 9 ^ a[x0 & 7]);
        x1 = (x0 ^ a[x3 & 7]);
    } else {
        bump(x2);
        x3 = (x1 * 0 + g1 - 5);
    }
    if (x3 != 7) {
        print_int(g0 | x0);
        bump(9);
    }
    x1 = (4 + 7 | (1 < 0));
    x1 = h2(g1, a[x0 & 7] | a[g1 & 7]);
    x3 = h1(g2, x0 | g0);
    g0 = x2;
    i0 = 0;
    do {
        if (g1 | a[x0 & 7] > 5)
            x3 = h0(g1 * a[x2 & 7], 6);
        bump(x0);
        i0++;
    } while (i0 < 3);
    print_int(g0);
    if (a[x3 & 7] != 9) {
        for (i0 = 0; i0 < 1; i0++) {
            x2 = (g1 * a[x3 & 7] - 4 * a[g1 & 7]);
        }
        g1 = (a[g0 & 7] - g0 - 4 - g2);
    } else {
        g2 = ((a[g1 & 7] < g0) * x3);
        g1 = (g0 | 7);
        x3 = (x0 + a[g1 & 7]);
    }
    i0 = 0;
    while (i0 < 1) {
        x0 = a[x3 & 7] ^ a[g2 & 7] / (1 + ((8) & 3));
        i0++;
    }
    for (i0 = 0; i0 < 1; i0++) {
        if (x2 - 0 == 2) break;
        i1 = 0;
        while (i1 < 3) {
            g1 = 8;
            print_int(g0 % (1 + ((9) & 3)));
            i1++;
        }
        x0 = (g1 & g2 == x0);
    }
    if (a[g0 & 7] < 2) {
        x0 = (g2 & a[x2 & 7]);
        if ((x3 < x2) == 9) {
            a[4 & 7] = x0 | g2;
        }
        bump(2);
    }
    i0 = 0;
    while (i0 < 2) {
        if (8 == 2) break;
        x3 = a[g0 & 7];
        i0++;
    }
    x3 = (a[x3 & 7] ^ 9 - a[x0 & 7] + a[x2 & 7]);
    x1 = h2(3 - 7, x0);
    i0 = 0;
    do {
        bump(g1 + g0);
        i0++;
    } while (i0 < 1);
    x2 = (a[x1 & 7] % (1 + ((a[g0 & 7]) & 3)) < x1 & g2);
    if (9 & g2 < 8) {
        x3 = (4 & g1 / (1 + ((g1) & 3)));
    }
    i0 = 0;
    do {
        x2 = a[g2 & 7] & g1 / (1 + ((x3 ^ 7) & 3));
        i0++;
    } while (i0 < 3);
    for (i0 = 0; i0 < 1; i0++) {
        switch (x3 & 3) {
        case 0:
            x2 = x2 / (1 + ((8 - 1) & 3));
            break;
        case 1:
            x0--;
            break;
        case 2:
            bump(1);
            break;
        default:
            x2 = (x1 - x0 ^ x2);
        }
    }
    g0 = a[x0 & 7];
    switch (g2 & 3) {
    case 0:
        g2 = (1 * x3 % (1 + ((a[x1 & 7]) & 3)));
        print_int((a[x2 & 7] == g1));
        g2 = 3;
        break;
    default:
        x0 = 1 % (1 + ((g2 | g1) & 3));
    }
    bump(a[g1 & 7]);
    if (g1 - 2 != 0) {
        g2 = (a[x1 & 7] + g0 | x3);
        x2--;
        x2 = h2(0, a[g2 & 7]);
        x2 = a[x2 & 7];
        g0 = (6 | a[g0 & 7] ^ x2 * g0);
        x2 = (8 + 1 + 2 & x2);
    } else {
        switch (g0 % (1 + ((a[x1 & 7]) & 3)) & 3) {
        case 0:
            x0 = x3;
        case 1:
            x1 = ((a[g0 & 7] == a[x3 & 7]) == g0);
        case 2:
            g2 = a[g2 & 7];
            break;
        default:
            x1++;
        }
    }
    i0 = 0;
    while (i0 < 0) {
        x0 = h1((0 < g1), 4);
        i0++;
    }
    g2 = (a[g2 & 7] ^ a[x2 & 7] - x1 % (1 + ((a[x1 & 7]) & 3)));
    bump(g2 - x1);
    i0 = 0;
    do {
        g1 = ((x0 < 8) - x1 | g2);
        x1 = (6 / (1 + ((a[g1 & 7]) & 3)) * g2);
        if (x0 + g1 == 8) {
            x1 = (x1 ^ a[x3 & 7]);
            x3++;
        } else {
            g1 = 1;
        }
        i0++;
    } while (i0 < 0);
    switch ((4 < 1) & 3) {
    case 0:
        if (2 < 8) {
            x3 = a[x3 & 7];
        } else {
            x1 = 8 / (1 + ((x0 / (1 + ((5) & 3))) & 3));
        }
        break;
    case 1:
        print_int(g0);
        break;
    default:
        x0--;
    }
    g0 = g1;
    for (i0 = 0; i0 < 3; i0++) {
        g2 = (0 ^ g0 ^ 6 % (1 + ((8) & 3)));
        x1++;
        if (3 / (1 + ((x1) & 3)) == 1) break;
        x0 = x2;
    }
    x1 = a[x1 & 7] * a[g1 & 7] % (1 + (((a[x2 & 7] == x1)) & 3));
    x1 = (a[x2 & 7] - a[x3 & 7] - a[x3 & 7]);
    x1 = g1 / (1 + ((x1) & 3));
    i0 = 0;
    while (i0 < 0) {
        g0 = (a[g0 & 7] | (x0 < g1));
        i1 = 0;
        do {
            g0 = (8 | 4);
            g2 = (a[x0 & 7] - a[x2 & 7]);
            i1++;
        } while (i1 < 1);
        i0++;
    }
    i0 = 0;
    do {
        x1 = (a[x2 & 7] & x3 ^ 5);
        bump(x1 % (1 + ((7) & 3)));
        x1 = (g2 < 9) / (1 + ((a[g0 & 7]) & 3));
        a[x0 & 7] = 3 & a[g1 & 7];
        x2--;
        g2 = (x0 & 0 & a[x1 & 7]);
        i0++;
    } while (i0 < 2);
    g2 = 2 % (1 + ((g2 % (1 + ((a[x1 & 7]) & 3))) & 3));
    x0 = a[x0 & 7];
    g1 = x2;
    a[x0 & 7] = x0;
    i0 = 0;
    while (i0 < 0) {
        x2--;
        i1 = 0;
        while (i1 < 1) {
            x0 = x3;
            i1++;
        }
        print_int(g1);
        i0++;
    }
    i0 = 0;
    while (i0 < 1) {
        x0 = a[x0 & 7];
        g1 = (a[x3 & 7] - x0 < 2 - g2);
        a[g2 & 7] = x2 % (1 + ((x1) & 3));
        i0++;
    }
    x1 = ((a[g2 & 7] < 2) == g1 ^ a[x0 & 7]);
    g2 = 3;
    i0 = 0;
    while (i0 < 3) {
        x3 = g2 % (1 + ((a[x0 & 7]) & 3));
        if (g2 - 6 > 3) {
            x3++;
        }
        print_int(a[x2 & 7] & 4);
        x3++;
        i0++;
    }
    switch (a[g2 & 7] % (1 + ((a[x3 & 7]) & 3)) & 3) {
    case 0:
        a[g0 & 7] = x2 & a[x3 & 7];
        a[3 & 7] = x0 / (1 + ((x2) & 3));
    default:
        bump(6);
    }
    x1 = (x0 ^ a[x2 & 7]);
    g0 = ((g2 == a[g2 & 7]) < a[g2 & 7] % (1 + ((x3) & 3)));
    a[a[x3 & 7] & 7] = 2;
    x0 = 4;
    i0 = 0;
    while (i0 < 2) {
        for (i1 = 0; i1 < 0; i1++) {
            g1 = g0;
            x1 = 8 / (1 + ((a[x1 & 7] & a[x2 & 7]) & 3));
        }
        i1 = 0;
        do {
            x2 = h2(g0 / (1 + ((g1) & 3)), x2 % (1 + ((a[x0 & 7]) & 3)));
            i1++;
        } while (i1 < 2);
        i0++;
    }
    if (1 * a[g0 & 7] != 5) {
        x3 = (a[x2 & 7] - x2 < a[x3 & 7] + x3);
        i0 = 0;
        while (i0 < 0) {
            print_int(g1);
            i0++;
        }
        x2 = h1((x1 == x2), 6);
        x0 = x3;
    } else {
        x3 = (a[x2 & 7] | a[g0 & 7] & g2 * x3);
        x2--;
        bump(x0 | x1);
        g1 = (g2 + (x1 == x1));
    }
    x3 = h1(1 - a[x1 & 7], 0 | 6);
    x2 = ((9 == x2) ^ g0);
    switch ((x2 < a[g2 & 7]) & 3) {
    case 0:
        g0 = x0 & 5 / (1 + ((a[g0 & 7] - 9) & 3));
        g1 = (g2 + x2 - (a[g0 & 7] == g2));
        break;
    case 1:
        x1 = g2;
        break;
    default:
        x1 = x2;
    }
    switch (6 ^ x1 & 3) {
    case 0:
        x1 = ((g1 < a[x1 & 7]) & (a[g0 & 7] < x0));
        x2 = x0;
        x1 = h1(x1 / (1 + ((g0) & 3)), a[x0 & 7]);
    case 1:
        g1 = ((0 < x0) - 6 % (1 + ((a[x0 & 7]) & 3)));
        break;
    default:
        g2 = 6 / (1 + ((a[g0 & 7] & x1) & 3));
    }
    g1 = (g2 % (1 + ((g1) & 3)) * 1 | a[x0 & 7]);
    x3++;
    switch (0 & 3) {
    case 0:
        x1 = (g1 / (1 + ((x0) & 3)) | 1);
        break;
    case 1:
        a[x0 & 7] = x1 * g0;
    case 2:
        a[x0 & 7] = (2 < g1);
        break;
    default:
        print_int((a[x3 & 7] < g1));
    }
    x1 = h0(g2 % (1 + ((2) & 3)), x0);
    x2--;
    i0 = 0;
    do {
        switch (a[x0 & 7] | g1 & 3) {
        case 0:
            g2 = (x3 == 1);
            break;
        default:
            a[x1 & 7] = a[x0 & 7] + 5;
        }
        i0++;
    } while (i0 < 1);
    x1++;
    if (2 != 8) {
        x0--;
        x3 = a[x2 & 7];
        g2 = g1;
        x2 = (a[g2 & 7] & g1 + g1);
    } else {
        g2 = x2;
        i0 = 0;
        do {
            x3 = (a[x1 & 7] & x2 == x3);
            x0 = 7;
            i0++;
        } while (i0 < 0);
    }
    switch (a[x1 & 7] - 9 & 3) {
    case 0:
        x3--;
        break;
    case 1:
        a[0 & 7] = a[g1 & 7] ^ a[x0 & 7];
    case 2:
        g2 = (5 + 1 ^ x2);
        break;
    default:
        x1 = (a[x0 & 7] % (1 + ((g0) & 3)) < a[x1 & 7] % (1 + ((5) & 3)));
    }
    x1 = (4 | 2 | a[g1 & 7]);
    g0 = (a[x0 & 7] + 2 < g1 / (1 + ((7) & 3)));
    i0 = 0;
    while (i0 < 2) {
        x2 = a[x3 & 7];
        i0++;
    }
    x1 = a[x0 & 7];
    for (i0 = 0; i0 < 3; i0++) {
        x2 = (g1 - x3 - a[x1 & 7] ^ g2);
        if (9 < 9)
            x3 = (a[g2 & 7] | a[x3 & 7] ^ g1);
        print_int(a[x1 & 7]);
    }
    x0 = (a[g0 & 7] + 2 * g0);
    x2 = 9;
    if (a[x0 & 7] != 5) {
        g2 = g1;
        g0 = a[x2 & 7] + a[x0 & 7] % (1 + ((g2 * g0) & 3));
    } else {
        a[a[g1 & 7] & 7] = g0 * 1;
        bump(g2 * g2);
        a[x0 & 7] = a[g0 & 7];
    }
    for (i0 = 0; i0 < 1; i0++) {
        a[9 & 7] = (x0 < x3);
        x1++;
    }
    x3 = h2(g0, x0);
    g1 = (8 < x1) / (1 + ((x3) & 3));
    a[g0 & 7] = x2 - x3;
    switch (a[g0 & 7] & x2 & 3) {
    case 0:
        print_int(x2);
        break;
    case 1:
        g0 = 3;
        break;
    case 2:
        a[x2 & 7] = 3 % (1 + ((x1) & 3));
        break;
    default:
        g1 = 1;
    }
    bump(3 ^ g1);
    x0--;
    a[x2 & 7] = g2;
    x1 = 9 / (1 + ((a[g1 & 7]) & 3));
    i0 = 0;
    while (i0 < 1) {
        x0 = (a[x1 & 7] + 3 * g2);
        g1 = x1;
        a[4 & 7] = (a[g1 & 7] == a[g2 & 7]);
        i0++;
    }
    return (x0 + x1) & 255;
}
