struct node {
    int val;
    struct node *next;
};

struct node n1, n2, n3;

int main(void)
{
    struct node *p;
    int s;
    n1.val = 1;
    n2.val = 2;
    n3.val = 3;
    n1.next = &n2;
    n2.next = &n3;
    n3.next = 0;
    s = 0;
    p = &n1;
    while (p != 0) {
        s = s + p->val;
        p = p->next;
    }
    return s;
}
