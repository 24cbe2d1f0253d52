struct pt {
    int x;
    int y;
};

struct pt g;

int main(void)
{
    struct pt *q;
    q = &g;
    q->x = 7;
    q->y = q->x + 1;
    return g.y;
}
