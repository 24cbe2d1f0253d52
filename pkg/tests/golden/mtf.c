unsigned char block[4];
int zptr[4];
int mtfv[16];
int mtfFreq[258];
int nInUse;
int last;
int nMTF;

void generateMTFValues(void)
{
    unsigned char yy[256];
    int i, j;
    int zPend;
    int wr;
    int EOB;
    unsigned char ll_i;
    unsigned char tmp, tmp2;

    EOB = nInUse + 1;
    for (i = 0; i <= EOB; i++) {
        mtfFreq[i] = 0;
    }
    wr = 0;
    zPend = 0;
    for (i = 0; i < nInUse; i++) {
        yy[i] = (unsigned char) i;
    }
    for (i = 0; i <= last; i++) {
        j = zptr[i];
        if (j == 0) {
            j = last;
        } else {
            j = j - 1;
        }
        ll_i = block[j];
        if (yy[0] == ll_i) {
            zPend++;
        } else {
            if (zPend > 0) {
                zPend--;
                while (1) {
                    switch (zPend % 2) {
                    case 0:
                        mtfv[wr] = 0;
                        wr++;
                        mtfFreq[0]++;
                        break;
                    case 1:
                        mtfv[wr] = 1;
                        wr++;
                        mtfFreq[1]++;
                        break;
                    default:
                        ;
                    }
                    if (zPend < 2) {
                        break;
                    }
                    zPend = (zPend - 2) / 2;
                }
                zPend = 0;
            }
            tmp = yy[1];
            yy[1] = yy[0];
            j = 1;
            while (ll_i != tmp) {
                j++;
                tmp2 = tmp;
                tmp = yy[j];
                yy[j] = tmp2;
            }
            yy[0] = tmp;
            mtfv[wr] = j + 1;
            wr++;
            mtfFreq[j + 1]++;
        }
    }
    if (zPend > 0) {
        zPend--;
        while (1) {
            switch (zPend % 2) {
            case 0:
                mtfv[wr] = 0;
                wr++;
                mtfFreq[0]++;
                break;
            case 1:
                mtfv[wr] = 1;
                wr++;
                mtfFreq[1]++;
                break;
            default:
                ;
            }
            if (zPend < 2) {
                break;
            }
            zPend = (zPend - 2) / 2;
        }
        zPend = 0;
    }
    mtfv[wr] = EOB;
    wr++;
    mtfFreq[EOB]++;
    nMTF = wr;
}

int main(void)
{
    block[0] = 1;
    block[1] = 0;
    block[2] = 2;
    block[3] = 0;
    zptr[0] = 3;
    zptr[1] = 0;
    zptr[2] = 1;
    zptr[3] = 2;
    nInUse = 3;
    last = 3;
    generateMTFValues();
    return nMTF;
}
